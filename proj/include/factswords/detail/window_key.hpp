#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>

namespace fw::detail {

/// Bits needed per symbol for alphabet size d (d >= 2).
inline int symbol_bits(std::uint32_t d) {
  return std::bit_width(d - 1u);
}

/// True when length-k windows over alphabet d pack losslessly into 64 bits.
inline bool packable(std::uint32_t d, std::size_t k) {
  return k * static_cast<std::size_t>(symbol_bits(d)) <= 64;
}

inline std::uint64_t pack_window(std::span<const std::uint32_t> w, int bits) {
  std::uint64_t key = 0;
  for (std::uint32_t s : w) key = (key << bits) | s;
  return key;
}

/// Byte-key fallback for windows too wide for 64-bit packing.
inline std::string byte_window(std::span<const std::uint32_t> w) {
  std::string key(w.size() * sizeof(std::uint32_t), '\0');
  std::memcpy(key.data(), w.data(), key.size());
  return key;
}

}  // namespace fw::detail
