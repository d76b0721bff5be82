#include "factswords/santa_fe.hpp"

#include <map>
#include <random>

#include <gtest/gtest.h>

namespace {

using fw::binarize_santa_fe;
using fw::decode_santa_fe;
using fw::fact_bit;
using fw::gen_santa_fe;
using fw::SantaFeGenerator;
using fw::SantaFePair;
using fw::SantaFeParams;

TEST(FactBit, Deterministic) {
  for (std::uint64_t k : {1ull, 5ull, 123456789ull})
    for (std::uint64_t seed : {0ull, 42ull})
      EXPECT_EQ(fact_bit(k, seed), fact_bit(k, seed));
  EXPECT_THROW(fact_bit(0, 1), std::domain_error);
}

TEST(FactBit, BalancedOverFirst1e5) {
  std::uint64_t ones = 0;
  const std::uint64_t n = 100000;
  for (std::uint64_t k = 1; k <= n; ++k) ones += fact_bit(k, 2024);
  const double frac = static_cast<double>(ones) / n;
  EXPECT_GE(frac, 0.49);
  EXPECT_LE(frac, 0.51);
}

TEST(FactBit, SeedsProduceDifferentSequences) {
  for (auto [a, b] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {1, 2}, {7, 8}, {1000, 1001}}) {
    bool differ = false;
    for (std::uint64_t k = 1; k <= 64 && !differ; ++k)
      differ = fact_bit(k, a) != fact_bit(k, b);
    EXPECT_TRUE(differ) << "seeds " << a << " vs " << b;
  }
}

TEST(SantaFe, EmptyRealization) {
  EXPECT_TRUE(gen_santa_fe({2.0, 1, 1}, 0).empty());
}

TEST(SantaFe, PairsNeverContradict) {
  const auto pairs = gen_santa_fe({2.0, 7, 9}, 20000);
  std::map<std::uint64_t, std::uint32_t> value_of;
  for (const auto& p : pairs) {
    auto [it, inserted] = value_of.emplace(p.k, p.bit);
    if (!inserted) {
      EXPECT_EQ(it->second, p.bit) << "fact " << p.k;
    }
  }
}

TEST(SantaFe, SeedDeterminism) {
  const SantaFeParams params{2.0, 11, 13};
  const auto a = gen_santa_fe(params, 5000);
  const auto b = gen_santa_fe(params, 5000);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(SantaFe, MarginalFrequencyOfRankOne) {
  const auto pairs = gen_santa_fe({2.0, 3, 1}, 10000);
  std::uint64_t ones = 0;
  for (const auto& p : pairs) ones += p.k == 1;
  EXPECT_NEAR(static_cast<double>(ones) / 10000.0, 0.608, 0.02);
}

TEST(SantaFe, RejectsBadAlpha) {
  EXPECT_THROW(gen_santa_fe({1.0, 1, 1}, 10), std::domain_error);
  EXPECT_THROW(gen_santa_fe({0.9, 1, 1}, 10), std::domain_error);
}

TEST(Binarize, HandWorkedEncodings) {
  // k=1, bit=0 -> digits "1", bit, separator.
  auto one = binarize_santa_fe(std::vector<SantaFePair>{{1, 0}});
  EXPECT_EQ(one.symbols, (std::vector<std::uint32_t>{1, 0, fw::kSepSymbol}));
  // k=5 = 101 in binary, bit=1.
  auto five = binarize_santa_fe(std::vector<SantaFePair>{{5, 1}});
  EXPECT_EQ(five.symbols, (std::vector<std::uint32_t>{1, 0, 1, 1, fw::kSepSymbol}));
  EXPECT_EQ(five.alphabet_size, 3u);
}

TEST(Binarize, RoundTripsRandomRealizations) {
  std::mt19937_64 seed_rng(404);
  for (int trial = 0; trial < 1000; ++trial) {
    SantaFeParams params{1.5 + (trial % 3), seed_rng(), seed_rng()};
    const auto pairs = gen_santa_fe(params, 1 + trial % 50);
    const auto decoded = decode_santa_fe(binarize_santa_fe(pairs));
    ASSERT_EQ(decoded.size(), pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) EXPECT_EQ(decoded[i], pairs[i]);
  }
}

TEST(Binarize, DecodeRejectsMalformed) {
  fw::SymbolSeq bad;
  bad.alphabet_size = 3;
  bad.symbols = {0, 1, fw::kSepSymbol};  // leading digit 0
  EXPECT_THROW(decode_santa_fe(bad), std::invalid_argument);
  bad.symbols = {1, fw::kSepSymbol};  // lone digit, no fact bit
  EXPECT_THROW(decode_santa_fe(bad), std::invalid_argument);
  bad.symbols = {1, 0, fw::kSepSymbol, 1};  // trailing partial segment
  EXPECT_THROW(decode_santa_fe(bad), std::invalid_argument);
}

// Per-pair encoding means block encodings concatenate: the code length of
// a joint block can be measured on binarize(first) ++ binarize(second).
TEST(Binarize, ComposesOverConcatenation) {
  const auto pairs = gen_santa_fe({2.0, 31, 7}, 400);
  const std::span<const SantaFePair> all(pairs);
  const auto whole = binarize_santa_fe(all);
  const auto glued =
      fw::concat(binarize_santa_fe(all.subspan(0, 150)),
                 binarize_santa_fe(all.subspan(150)));
  EXPECT_EQ(whole.symbols, glued.symbols);
}

TEST(SantaFeGenerator, SharedSamplerMatchesOwned) {
  fw::ZipfSampler sampler(2.0);
  SantaFeParams params{2.0, 21, 22};
  SantaFeGenerator own(params);
  SantaFeGenerator shared(params, sampler);
  for (int i = 0; i < 500; ++i) EXPECT_EQ(own.next(), shared.next());
}

}  // namespace
