#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "factswords/detail/window_key.hpp"
#include "factswords/sequence.hpp"

namespace fw {

/// Subword complexity V(k|x): the exact number of distinct contiguous
/// length-k substrings of x. Requires 1 <= k <= len(x).
inline std::uint64_t subword_complexity(const SymbolSeq& x, std::uint32_t k) {
  if (k == 0 || k > x.size())
    throw std::invalid_argument("subword_complexity: need 1 <= k <= len(x)");
  x.validate();
  const auto& s = x.symbols;
  const std::size_t windows = s.size() - k + 1;
  if (detail::packable(x.alphabet_size, k)) {
    const int bits = detail::symbol_bits(x.alphabet_size);
    const int width = bits * static_cast<int>(k);
    const std::uint64_t mask =
        width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(windows);
    std::uint64_t window = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      window = (window << bits) | s[i];
      if (i + 1 >= k) seen.insert(window & mask);
    }
    return seen.size();
  }
  std::unordered_set<std::string> seen;
  seen.reserve(windows);
  for (std::size_t j = 0; j + k <= s.size(); ++j)
    seen.insert(detail::byte_window({s.data() + j, k}));
  return seen.size();
}

}  // namespace fw
