#pragma once

#include <string_view>

namespace fw {

inline constexpr std::string_view kToolName = "factswords";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace fw
