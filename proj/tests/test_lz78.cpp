#include "factswords/lz78.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "factswords/random.hpp"
#include "factswords/sequence.hpp"

namespace {

using fw::lz78_code_len;
using fw::make_seq;
using fw::SymbolSeq;

SymbolSeq uniform_binary(std::uint64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> symbols(n);
  for (auto& s : symbols) s = static_cast<std::uint32_t>(rng() & 1u);
  return make_seq(2, std::move(symbols));
}

TEST(Lz78, EmptyIsZero) {
  SymbolSeq x;
  x.alphabet_size = 2;
  EXPECT_DOUBLE_EQ(lz78_code_len(x), 0.0);
}

TEST(Lz78, HandRunParse) {
  // "ab" over D=2: phrases "a", "b" cost (log2 1 + 1) + (log2 2 + 1) = 3.
  EXPECT_DOUBLE_EQ(lz78_code_len(make_seq(2, {0, 1})), 3.0);
  // "aaaa": phrases "a", "aa", final partial "a" extends phrase 1 -> "aa"
  // is phrase 2, then the trailing "a" is charged as phrase 3.
  const double expected = (0.0 + 1.0) + (std::log2(2.0) + 1.0) + (std::log2(3.0) + 1.0);
  EXPECT_NEAR(lz78_code_len(make_seq(2, {0, 0, 0, 0})), expected, 1e-12);
}

TEST(Lz78, DeterministicAndNonNegative) {
  const auto x = uniform_binary(5000, 42);
  const double a = lz78_code_len(x);
  EXPECT_EQ(a, lz78_code_len(x));
  EXPECT_GE(a, 0.0);
}

TEST(Lz78, RateNearOneBitForUniformBinary) {
  const auto x = uniform_binary(1ull << 16, 7);
  const double rate = lz78_code_len(x) / static_cast<double>(x.size());
  EXPECT_GE(rate, 0.9);
  EXPECT_LE(rate, 1.25);
}

// Dictionary reuse: parsing x twice in a row costs less than two
// independent parses.
TEST(Lz78, DuplicationIsSubadditive) {
  for (int s = 0; s < 5; ++s) {
    const auto x = uniform_binary(1ull << 12, fw::derive_seed(33, s));
    EXPECT_LT(lz78_code_len(fw::concat(x, x)), 2.0 * lz78_code_len(x))
        << "seed " << s;
  }
}

TEST(Lz78, AlphabetTermUsesDeclaredSize) {
  // Same symbols, bigger declared alphabet: every phrase pays log2 D.
  const auto narrow = make_seq(2, {0, 1, 0, 0, 1, 1});
  const auto wide = make_seq(4, {0, 1, 0, 0, 1, 1});
  EXPECT_GT(lz78_code_len(wide), lz78_code_len(narrow));
}

}  // namespace
