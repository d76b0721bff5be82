#pragma once

#include <cstdint>
#include <random>

namespace fw {

namespace detail {

inline constexpr std::uint64_t rotl64(std::uint64_t x, int b) {
  return (x << b) | (x >> (64 - b));
}

}  // namespace detail

/// splitmix64 step: advances `state` and returns the next value.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives an independent 64-bit seed for stream `stream` from `base`.
/// Used to hand disjoint seeds to replicated experiment cells.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t s = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  std::uint64_t z = splitmix64(s);
  return splitmix64(s) ^ z;
}

/// SipHash-2-4 of a single 8-byte little-endian word under key (k0, k1).
/// A keyed PRF; we use it wherever a reproducible, statistically strong
/// bit source indexed by an integer is needed.
inline std::uint64_t siphash24(std::uint64_t k0, std::uint64_t k1,
                               std::uint64_t word) {
  using detail::rotl64;
  std::uint64_t v0 = 0x736f6d6570736575ULL ^ k0;
  std::uint64_t v1 = 0x646f72616e646f6dULL ^ k1;
  std::uint64_t v2 = 0x6c7967656e657261ULL ^ k0;
  std::uint64_t v3 = 0x7465646279746573ULL ^ k1;
  auto sipround = [&] {
    v0 += v1;
    v1 = rotl64(v1, 13);
    v1 ^= v0;
    v0 = rotl64(v0, 32);
    v2 += v3;
    v3 = rotl64(v3, 16);
    v3 ^= v2;
    v0 += v3;
    v3 = rotl64(v3, 21);
    v3 ^= v0;
    v2 += v1;
    v1 = rotl64(v1, 17);
    v1 ^= v2;
    v2 = rotl64(v2, 32);
  };
  // One full message word, then the length block (8 bytes -> top byte 8).
  v3 ^= word;
  sipround();
  sipround();
  v0 ^= word;
  const std::uint64_t tail = 8ULL << 56;
  v3 ^= tail;
  sipround();
  sipround();
  v0 ^= tail;
  v2 ^= 0xff;
  sipround();
  sipround();
  sipround();
  sipround();
  return v0 ^ v1 ^ v2 ^ v3;
}

/// Uniform double in [0, 1) with 53 random bits. Unlike
/// std::uniform_real_distribution this is bit-identical across standard
/// library implementations, which the reproducibility guarantees rely on.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace fw
