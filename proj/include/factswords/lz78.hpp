#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "factswords/sequence.hpp"

namespace fw {

/// LZ78 code length of x in bits: the incremental parse into T phrases,
/// with the t-th phrase charged log2(t) + log2(D) bits (log2(1) = 0). The
/// final partial phrase, if any, is charged like a full one. Real-valued
/// logs, no ceiling; intended as a smooth code-length proxy rather than an
/// actual bitstream.
inline double lz78_code_len(const SymbolSeq& x) {
  x.validate();
  if (x.empty()) return 0.0;
  const double log2d = std::log2(static_cast<double>(x.alphabet_size));
  // Children keyed by (node << 32) | symbol; node 0 is the root, phrase
  // node ids start at 1.
  std::unordered_map<std::uint64_t, std::uint32_t> children;
  children.reserve(x.size() < (1u << 22) ? x.size() : (1u << 22));
  std::uint32_t next_id = 1;
  std::uint64_t phrases = 0;
  double bits = 0.0;
  std::uint32_t node = 0;
  for (std::uint32_t s : x.symbols) {
    const std::uint64_t key = (static_cast<std::uint64_t>(node) << 32) | s;
    auto it = children.find(key);
    if (it != children.end()) {
      node = it->second;
      continue;
    }
    children.emplace(key, next_id++);
    ++phrases;
    bits += std::log2(static_cast<double>(phrases)) + log2d;
    node = 0;
  }
  if (node != 0) {
    // Sequence ended mid-phrase.
    ++phrases;
    bits += std::log2(static_cast<double>(phrases)) + log2d;
  }
  return bits;
}

}  // namespace fw
