#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "factswords/random.hpp"
#include "factswords/sequence.hpp"
#include "factswords/zipf.hpp"

namespace fw {

/// Parameters of one Santa Fe realization. Identical params give
/// bit-identical output.
struct SantaFeParams {
  double alpha = 2.0;             // Zipf exponent, > 1
  std::uint64_t sample_seed = 1;  // drives the index draws K_i
  std::uint64_t fact_seed = 1;    // fixes the fact sequence z_k
};

/// One step (K_i, z_{K_i}) of a Santa Fe realization.
struct SantaFePair {
  std::uint64_t k = 1;   // fact index, >= 1
  std::uint32_t bit = 0; // fact value, 0 or 1

  friend bool operator==(const SantaFePair&, const SantaFePair&) = default;
};

/// The fixed fact sequence: bit k of the source keyed by fact_seed.
/// Deterministic across calls, runs, and platforms. A keyed PRF stands in
/// for an algorithmically random sequence, which no program can produce.
inline std::uint32_t fact_bit(std::uint64_t k, std::uint64_t fact_seed) {
  if (k == 0) throw std::domain_error("fact_bit: fact indices start at 1");
  return static_cast<std::uint32_t>(
      siphash24(fact_seed, fact_seed ^ 0x5851f42d4c957f2dULL, k) & 1u);
}

/// Streams Santa Fe pairs. Construction builds the Zipf table once; reuse
/// one generator per (alpha) when drawing many realizations.
class SantaFeGenerator {
 public:
  explicit SantaFeGenerator(const SantaFeParams& params)
      : params_(params), sampler_(params.alpha), rng_(params.sample_seed) {}

  SantaFeGenerator(const SantaFeParams& params, const ZipfSampler& shared)
      : params_(params), sampler_(shared), rng_(params.sample_seed) {
    if (shared.alpha() != params.alpha)
      throw std::invalid_argument("SantaFeGenerator: sampler alpha mismatch");
  }

  SantaFePair next() {
    const std::uint64_t k = sampler_(rng_);
    return SantaFePair{k, fact_bit(k, params_.fact_seed)};
  }

  std::vector<SantaFePair> take(std::uint64_t n) {
    std::vector<SantaFePair> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(next());
    return out;
  }

  const SantaFeParams& params() const { return params_; }

 private:
  SantaFeParams params_;
  ZipfSampler sampler_;
  std::mt19937_64 rng_;
};

inline std::vector<SantaFePair> gen_santa_fe(const SantaFeParams& params,
                                             std::uint64_t n) {
  SantaFeGenerator gen(params);
  return gen.take(n);
}

/// Separator symbol of the ternary pair encoding.
inline constexpr std::uint32_t kSepSymbol = 2;

inline void append_binarized(const SantaFePair& p, std::vector<std::uint32_t>& out) {
  const int width = std::bit_width(p.k);
  for (int b = width - 1; b >= 0; --b)
    out.push_back(static_cast<std::uint32_t>((p.k >> b) & 1u));
  out.push_back(p.bit);
  out.push_back(kSepSymbol);
}

/// Maps pairs onto the fixed ternary alphabet {0, 1, SEP}: the binary
/// digits of k (most significant first), the fact bit, then a separator.
/// Injective and uniquely decodable; see decode_santa_fe.
inline SymbolSeq binarize_santa_fe(std::span<const SantaFePair> pairs) {
  SymbolSeq out;
  out.alphabet_size = 3;
  out.symbols.reserve(pairs.size() * 4);
  for (const auto& p : pairs) append_binarized(p, out.symbols);
  return out;
}

/// Inverse of binarize_santa_fe. Throws on any malformed segment.
inline std::vector<SantaFePair> decode_santa_fe(const SymbolSeq& x) {
  if (x.alphabet_size != 3)
    throw std::invalid_argument("decode_santa_fe: expected ternary alphabet");
  std::vector<SantaFePair> out;
  std::size_t seg_start = 0;
  for (std::size_t i = 0; i < x.symbols.size(); ++i) {
    if (x.symbols[i] != kSepSymbol) {
      if (x.symbols[i] > 1)
        throw std::invalid_argument("decode_santa_fe: symbol out of range");
      continue;
    }
    const std::size_t len = i - seg_start;
    if (len < 2)
      throw std::invalid_argument("decode_santa_fe: segment too short");
    const std::size_t digits = len - 1;
    if (digits > 64 || x.symbols[seg_start] != 1)
      throw std::invalid_argument("decode_santa_fe: bad index encoding");
    std::uint64_t k = 0;
    for (std::size_t j = seg_start; j < seg_start + digits; ++j)
      k = (k << 1) | x.symbols[j];
    out.push_back(SantaFePair{k, x.symbols[i - 1]});
    seg_start = i + 1;
  }
  if (seg_start != x.symbols.size())
    throw std::invalid_argument("decode_santa_fe: trailing partial segment");
  return out;
}

}  // namespace fw
