#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include "factswords/lz78.hpp"
#include "factswords/ngram.hpp"
#include "factswords/sequence.hpp"

namespace fw {

/// A computable stand-in for prefix-free Kolmogorov complexity: any
/// decodable code's length upper-bounds K up to an additive constant, so
/// estimators that compare against K accept any of these interchangeably.
struct CodeLengthOracle {
  std::string name;
  std::function<double(const SymbolSeq&)> code_len;

  double operator()(const SymbolSeq& x) const { return code_len(x); }
};

/// Two-part MDL code length: the best order-k maximum-likelihood fit plus
/// a BIC-style parameter charge, minimized over 0 <= k <= k_max:
///
///   min_k [ -log2 L_k(x) + (D-1) D^k / 2 * log2(n) + 2 log2(k+1) + 1 ]
///
/// The penalty grows monotonically in k, so the scan stops as soon as the
/// penalty alone exceeds the best total found.
inline double two_part_code_len(const SymbolSeq& x, std::uint32_t k_max) {
  if (k_max > x.size())
    throw std::invalid_argument("two_part_code_len: k_max exceeds length");
  x.validate();
  const double d = x.alphabet_size;
  const double log2n = std::log2(static_cast<double>(std::max<std::size_t>(x.size(), 1)));
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t k = 0; k <= k_max; ++k) {
    const double penalty = (d - 1.0) * std::pow(d, static_cast<double>(k)) / 2.0 * log2n +
                           2.0 * std::log2(static_cast<double>(k) + 1.0) + 1.0;
    if (penalty >= best) break;
    const double total = neg_log_lk(x, k) + penalty;
    if (total < best) best = total;
  }
  return best;
}

inline CodeLengthOracle lz78_oracle() {
  return CodeLengthOracle{"lz78", [](const SymbolSeq& x) { return lz78_code_len(x); }};
}

inline CodeLengthOracle two_part_oracle() {
  return CodeLengthOracle{"two-part", [](const SymbolSeq& x) {
                            return two_part_code_len(
                                x, static_cast<std::uint32_t>(x.size()));
                          }};
}

/// Oracle lookup by configuration name.
inline CodeLengthOracle make_oracle(std::string_view name) {
  if (name == "lz78") return lz78_oracle();
  if (name == "two-part") return two_part_oracle();
  throw std::invalid_argument("unknown oracle: " + std::string(name) +
                              " (expected lz78 or two-part)");
}

/// Algorithmic mutual information estimate
///   J(u, v) = C(u) + C(v) - C(uv)
/// under the given code-length oracle. Can be negative with proxy code
/// lengths; callers that fit power laws clip at zero, this function does
/// not.
inline double mi_estimate(const SymbolSeq& u, const SymbolSeq& v,
                          const CodeLengthOracle& oracle) {
  if (u.alphabet_size != v.alphabet_size)
    throw std::invalid_argument("mi_estimate: alphabet mismatch");
  return oracle(u) + oracle(v) - oracle(concat(u, v));
}

}  // namespace fw
