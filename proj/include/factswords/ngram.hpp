#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "factswords/detail/window_key.hpp"
#include "factswords/sequence.hpp"

namespace fw {

/// Context/successor counts of a fixed order k over one sequence.
///
/// Counts cover exactly the scored positions i = k+1..n: a context is a
/// window x_{i-k}^{i-1} that has a successor, so for every context c,
/// sum_s successor_count(c, s) == context_count(c), and the context counts
/// total n - k. Windows are packed into 64-bit keys when the alphabet and
/// order allow, with an exact byte-string fallback otherwise.
class NGramTable {
 public:
  NGramTable(const SymbolSeq& x, std::uint32_t order) : order_(order), n_(x.size()) {
    if (order > x.size())
      throw std::invalid_argument("NGramTable: order exceeds sequence length");
    x.validate();
    d_ = x.alphabet_size;
    bits_ = detail::symbol_bits(d_);
    packed_ = detail::packable(d_, static_cast<std::size_t>(order) + 1);
    const std::size_t scored = x.size() - order;
    const double dcap = std::pow(static_cast<double>(d_), order + 1.0);
    const std::size_t cap =
        dcap < static_cast<double>(scored) ? static_cast<std::size_t>(dcap) : scored;
    if (packed_) {
      ctx_p_.reserve(cap);
      pair_p_.reserve(cap);
      const int pair_width = bits_ * static_cast<int>(order + 1);
      const std::uint64_t pair_mask =
          pair_width == 64 ? ~std::uint64_t{0}
                           : (std::uint64_t{1} << pair_width) - 1;
      const std::uint64_t ctx_mask = pair_mask >> bits_;
      std::uint64_t window = 0;
      const auto& s = x.symbols;
      for (std::size_t i = 0; i < s.size(); ++i) {
        window = (window << bits_) | s[i];
        if (i < order) continue;
        // window holds x_{i-k}..x_i in its low (k+1)*bits_ bits.
        ++pair_p_[window & pair_mask];
        ++ctx_p_[(window >> bits_) & ctx_mask];
      }
    } else {
      ctx_b_.reserve(cap);
      pair_b_.reserve(cap);
      const auto& s = x.symbols;
      for (std::size_t j = 0; j + order < s.size(); ++j) {
        std::span<const std::uint32_t> ctx(s.data() + j, order);
        std::span<const std::uint32_t> pair(s.data() + j, order + 1);
        ++ctx_b_[detail::byte_window(ctx)];
        ++pair_b_[detail::byte_window(pair)];
      }
    }
  }

  std::uint32_t order() const { return order_; }
  std::uint64_t length() const { return n_; }
  std::uint32_t alphabet_size() const { return d_; }
  std::uint64_t scored_positions() const { return n_ - order_; }

  std::uint64_t context_count(std::span<const std::uint32_t> ctx) const {
    if (ctx.size() != order_)
      throw std::invalid_argument("NGramTable: context length != order");
    if (packed_) {
      auto it = ctx_p_.find(detail::pack_window(ctx, bits_));
      return it == ctx_p_.end() ? 0 : it->second;
    }
    auto it = ctx_b_.find(detail::byte_window(ctx));
    return it == ctx_b_.end() ? 0 : it->second;
  }

  std::uint64_t successor_count(std::span<const std::uint32_t> ctx,
                                std::uint32_t sym) const {
    if (ctx.size() != order_)
      throw std::invalid_argument("NGramTable: context length != order");
    if (sym >= d_)
      throw std::invalid_argument("NGramTable: symbol out of alphabet range");
    if (packed_) {
      const std::uint64_t key = (detail::pack_window(ctx, bits_) << bits_) | sym;
      auto it = pair_p_.find(key);
      return it == pair_p_.end() ? 0 : it->second;
    }
    std::vector<std::uint32_t> w(ctx.begin(), ctx.end());
    w.push_back(sym);
    auto it = pair_b_.find(detail::byte_window(w));
    return it == pair_b_.end() ? 0 : it->second;
  }

  std::size_t distinct_contexts() const {
    return packed_ ? ctx_p_.size() : ctx_b_.size();
  }

  /// -log2 of the order-k maximum likelihood of the sequence: every scored
  /// position is charged -log2 of its empirical conditional frequency.
  double neg_log_likelihood_bits() const {
    double bits = 0.0;
    if (packed_) {
      for (const auto& [key, cnt] : pair_p_) {
        const std::uint64_t ctx_cnt = ctx_p_.at(key >> bits_);
        bits += static_cast<double>(cnt) *
                (std::log2(static_cast<double>(ctx_cnt)) -
                 std::log2(static_cast<double>(cnt)));
      }
    } else {
      for (const auto& [key, cnt] : pair_b_) {
        const std::string ctx_key = key.substr(0, key.size() - sizeof(std::uint32_t));
        const std::uint64_t ctx_cnt = ctx_b_.at(ctx_key);
        bits += static_cast<double>(cnt) *
                (std::log2(static_cast<double>(ctx_cnt)) -
                 std::log2(static_cast<double>(cnt)));
      }
    }
    return bits;
  }

  /// Sum of all context counts; equals length() - order().
  std::uint64_t total_context_count() const {
    std::uint64_t total = 0;
    if (packed_)
      for (const auto& [k, c] : ctx_p_) total += c;
    else
      for (const auto& [k, c] : ctx_b_) total += c;
    return total;
  }

 private:
  std::uint32_t order_;
  std::uint64_t n_;
  std::uint32_t d_ = 2;
  int bits_ = 1;
  bool packed_ = true;
  std::unordered_map<std::uint64_t, std::uint64_t> ctx_p_, pair_p_;
  std::unordered_map<std::string, std::uint64_t> ctx_b_, pair_b_;
};

/// -log2 L_k(x): the order-k maximum-likelihood code length in bits.
/// Zero whenever every context determines its successor (in particular for
/// k >= len - 1). Throws if k > len.
inline double neg_log_lk(const SymbolSeq& x, std::uint32_t k) {
  if (k > x.size())
    throw std::invalid_argument("neg_log_lk: order exceeds sequence length");
  if (x.size() == 0 || k >= x.size()) return 0.0;
  return NGramTable(x, k).neg_log_likelihood_bits();
}

}  // namespace fw
