#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "factswords/random.hpp"
#include "factswords/sequence.hpp"

namespace fw {

/// Finite-order Markov chain over a finite alphabet. Contexts of length
/// `order` are flattened base-D with the oldest symbol most significant:
/// index(c_1..c_m) = sum c_j * D^(m-j). `transitions` holds one row per
/// context; `initial` is a distribution over contexts.
struct MarkovSpec {
  std::uint32_t order = 0;
  std::uint32_t alphabet_size = 2;
  std::vector<std::vector<double>> transitions;
  std::vector<double> initial;

  std::uint64_t context_count() const {
    std::uint64_t c = 1;
    for (std::uint32_t i = 0; i < order; ++i) c *= alphabet_size;
    return c;
  }

  void validate() const {
    if (alphabet_size < 2)
      throw std::invalid_argument("MarkovSpec: alphabet_size must be >= 2");
    const std::uint64_t contexts = context_count();
    if (transitions.size() != contexts)
      throw std::invalid_argument("MarkovSpec: wrong number of transition rows");
    if (initial.size() != contexts)
      throw std::invalid_argument("MarkovSpec: wrong initial distribution size");
    auto check_row = [&](const std::vector<double>& row, std::size_t width,
                         const char* what) {
      if (row.size() != width)
        throw std::invalid_argument(std::string("MarkovSpec: bad row width in ") + what);
      double sum = 0.0;
      for (double p : row) {
        if (!(p >= 0.0))
          throw std::invalid_argument(std::string("MarkovSpec: negative entry in ") + what);
        sum += p;
      }
      if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument(std::string("MarkovSpec: row does not sum to 1 in ") + what);
    };
    for (const auto& row : transitions) check_row(row, alphabet_size, "transitions");
    check_row(initial, contexts, "initial");
  }

  /// Order-0 source with the given symbol distribution.
  static MarkovSpec iid(std::vector<double> probs) {
    MarkovSpec spec;
    spec.order = 0;
    spec.alphabet_size = static_cast<std::uint32_t>(probs.size());
    spec.transitions = {std::move(probs)};
    spec.initial = {1.0};
    spec.validate();
    return spec;
  }

  static MarkovSpec uniform_iid(std::uint32_t alphabet_size) {
    return iid(std::vector<double>(alphabet_size, 1.0 / alphabet_size));
  }

  /// Order-1 binary chain that repeats the previous symbol with
  /// probability 1 - flip. Stationary initial distribution (uniform).
  static MarkovSpec binary_flip(double flip) {
    if (!(flip >= 0.0 && flip <= 1.0))
      throw std::invalid_argument("binary_flip: flip must be in [0, 1]");
    MarkovSpec spec;
    spec.order = 1;
    spec.alphabet_size = 2;
    spec.transitions = {{1.0 - flip, flip}, {flip, 1.0 - flip}};
    spec.initial = {0.5, 0.5};
    spec.validate();
    return spec;
  }
};

namespace detail {

inline std::size_t sample_index(const std::vector<double>& probs,
                                std::mt19937_64& rng) {
  const double u = unit_double(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return i;
  }
  return probs.size() - 1;
}

}  // namespace detail

/// Samples n symbols from the chain; deterministic given seed.
/// Requires n >= spec.order (the first `order` symbols come from `initial`).
inline SymbolSeq gen_markov(const MarkovSpec& spec, std::uint64_t n,
                            std::uint64_t seed) {
  spec.validate();
  if (n < spec.order)
    throw std::invalid_argument("gen_markov: n must be >= spec.order");
  SymbolSeq out;
  out.alphabet_size = spec.alphabet_size;
  out.symbols.reserve(n);
  std::mt19937_64 rng(seed);

  const std::uint64_t d = spec.alphabet_size;
  std::uint64_t ctx_mod = spec.context_count();
  std::uint64_t ctx = detail::sample_index(spec.initial, rng);
  // Emit the initial context, oldest symbol first.
  if (spec.order > 0) {
    std::uint64_t c = ctx;
    std::vector<std::uint32_t> prefix(spec.order);
    for (std::uint32_t i = spec.order; i-- > 0;) {
      prefix[i] = static_cast<std::uint32_t>(c % d);
      c /= d;
    }
    out.symbols.insert(out.symbols.end(), prefix.begin(), prefix.end());
  }
  while (out.symbols.size() < n) {
    const auto s = static_cast<std::uint32_t>(
        detail::sample_index(spec.transitions[ctx], rng));
    out.symbols.push_back(s);
    if (spec.order > 0) ctx = (ctx * d + s) % ctx_mod;
  }
  return out;
}

}  // namespace fw
