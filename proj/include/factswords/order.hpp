#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "factswords/ngram.hpp"
#include "factswords/oracle.hpp"
#include "factswords/sequence.hpp"
#include "factswords/subword.hpp"

namespace fw {

/// markov_order with the oracle code length already in hand; avoids
/// re-running the oracle when the caller measured it anyway.
inline std::uint32_t markov_order_given_code_len(const SymbolSeq& x, double code_len) {
  if (x.empty())
    throw std::invalid_argument("markov_order: empty sequence");
  for (std::uint32_t k = 0;; ++k) {
    if (neg_log_lk(x, k) <= code_len) return k;
  }
}

/// Markov order estimate M(x): the smallest k >= 0 whose maximum-likelihood
/// code length -log2 L_k(x) does not exceed the oracle code length of x.
/// Always terminates with M <= len(x) - 1 since -log2 L_{n-1}(x) = 0.
inline std::uint32_t markov_order(const SymbolSeq& x, const CodeLengthOracle& oracle) {
  if (x.empty())
    throw std::invalid_argument("markov_order: empty sequence");
  return markov_order_given_code_len(x, oracle(x));
}

/// Vocabulary proxy V(x): subword complexity at window length M(x), with
/// window length 1 substituted when M(x) = 0 (a length-0 window counts
/// nothing meaningful).
inline std::uint64_t vocab_proxy(const SymbolSeq& x, std::uint32_t order_estimate) {
  return subword_complexity(x, std::max<std::uint32_t>(order_estimate, 1));
}

inline std::uint64_t vocab_proxy(const SymbolSeq& x, const CodeLengthOracle& oracle) {
  return vocab_proxy(x, markov_order(x, oracle));
}

}  // namespace fw
