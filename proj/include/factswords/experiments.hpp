#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "factswords/detail/parallel.hpp"
#include "factswords/facts.hpp"
#include "factswords/hilberg.hpp"
#include "factswords/markov.hpp"
#include "factswords/oracle.hpp"
#include "factswords/order.hpp"
#include "factswords/santa_fe.hpp"
#include "factswords/sequence.hpp"
#include "factswords/zipf.hpp"

namespace fw {

/// A simulated information source for experiment runs. The grid variable n
/// counts process steps: pairs for a Santa Fe source (the symbol blocks
/// handed to code-length measures are the ternary encodings of those
/// pairs), plain symbols for a Markov source.
struct SourceSpec {
  enum class Kind { santa_fe, markov };

  Kind kind = Kind::santa_fe;
  double alpha = 2.0;             // Santa Fe only
  std::uint64_t fact_seed = 1;    // Santa Fe only; fixed across replicates
  MarkovSpec markov_spec;         // Markov only
  std::string name = "santa-fe";

  static SourceSpec santa_fe(double alpha, std::uint64_t fact_seed = 1) {
    SourceSpec s;
    s.kind = Kind::santa_fe;
    s.alpha = alpha;
    s.fact_seed = fact_seed;
    s.name = "santa-fe(alpha=" + format_alpha(alpha) + ")";
    return s;
  }

  static SourceSpec markov(MarkovSpec spec, std::string name) {
    SourceSpec s;
    s.kind = Kind::markov;
    s.markov_spec = std::move(spec);
    s.name = std::move(name);
    return s;
  }

 private:
  static std::string format_alpha(double alpha) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", alpha);
    return buf;
  }
};

enum MeasureMask : unsigned {
  kMeasureFacts = 1u,
  kMeasureCode = 2u,
  kMeasureMi = 4u,
  kMeasureWords = 8u,
  kMeasureAll = 15u,
  kMeasureSymbolic = kMeasureCode | kMeasureMi | kMeasureWords,
};

/// One (n, seed) experiment cell. NaN / -1 mark measures that were not
/// requested for this run.
struct SandwichCell {
  std::uint64_t n = 0;
  std::uint32_t seed_index = 0;
  double facts = std::numeric_limits<double>::quiet_NaN();
  double code_len = std::numeric_limits<double>::quiet_NaN();
  double mi = std::numeric_limits<double>::quiet_NaN();
  double vocab = std::numeric_limits<double>::quiet_NaN();
  std::int64_t order = -1;
  std::uint64_t block_len = 0;  // symbols in the first block x_1^n
};

/// Seed-averaged curve for one sandwich term plus its fitted exponent.
/// `fit` is absent when fewer than three usable (positive-mean) grid points
/// remain; `note` says why.
struct TermSummary {
  std::string term;
  std::vector<std::pair<std::uint64_t, double>> mean_points;
  std::optional<HilbergFit> fit;
  std::string note;
};

/// All four power-law exponents of the facts/complexity/information/words
/// chain for one source, with the pairwise ordering flags at an additive
/// tolerance on the exponents.
struct SandwichReport {
  std::string source;
  std::string oracle;
  std::vector<std::uint64_t> grid;
  std::uint32_t seeds = 0;
  std::uint64_t seed_base = 0;
  unsigned measures = kMeasureAll;
  double tolerance = 0.1;
  double h_hat = std::numeric_limits<double>::quiet_NaN();

  std::vector<SandwichCell> cells;  // grid-major, then seed index

  TermSummary facts_term;       // E U(n)
  TermSummary redundancy_term;  // E C(x_1^n) - h_hat * E len(x_1^n)
  TermSummary mi_term;          // E J(x_1^n ; x_{n+1}^{2n})
  TermSummary words_term;       // E V(x_1^n)

  std::optional<bool> ord_facts_le_redundancy;
  std::optional<bool> ord_redundancy_le_mi;
  std::optional<bool> ord_mi_le_words;
  std::optional<bool> ord_facts_le_words;
};

namespace detail {

inline void validate_grid(std::span<const std::uint64_t> grid) {
  if (grid.empty()) throw std::invalid_argument("experiment grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] == 0 || (grid[i] & (grid[i] - 1)) != 0)
      throw std::invalid_argument("experiment grid must contain powers of two");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw std::invalid_argument("experiment grid must be strictly increasing");
  }
}

struct Realization {
  std::vector<SantaFePair> pairs;  // Santa Fe
  SymbolSeq symbols;               // Markov
};

inline Realization realize(const SourceSpec& source, const ZipfSampler* sampler,
                           std::uint64_t steps, std::uint64_t sample_seed) {
  Realization r;
  if (source.kind == SourceSpec::Kind::santa_fe) {
    std::mt19937_64 rng(sample_seed);
    r.pairs.reserve(steps);
    for (std::uint64_t i = 0; i < steps; ++i) {
      const std::uint64_t k = (*sampler)(rng);
      r.pairs.push_back(SantaFePair{k, fact_bit(k, source.fact_seed)});
    }
  } else {
    r.symbols = gen_markov(source.markov_spec, steps, sample_seed);
  }
  return r;
}

inline SymbolSeq block_of(const SourceSpec& source, const Realization& r,
                          std::uint64_t from, std::uint64_t count) {
  if (source.kind == SourceSpec::Kind::santa_fe)
    return binarize_santa_fe(
        std::span<const SantaFePair>(r.pairs.data() + from, count));
  return r.symbols.subseq(from, count);
}

inline double mean_of(std::span<const SandwichCell> cells, std::size_t offset,
                      std::size_t count, double SandwichCell::* member) {
  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) sum += cells[offset + i].*member;
  return sum / static_cast<double>(count);
}

inline void fit_term(TermSummary& term) {
  try {
    term.fit = hilberg_fit(term.mean_points);
  } catch (const InsufficientData& e) {
    term.fit.reset();
    term.note = e.what();
  }
}

inline std::optional<bool> exponents_ordered(const TermSummary& lo,
                                             const TermSummary& hi,
                                             double tolerance) {
  if (!lo.fit || !hi.fit) return std::nullopt;
  return lo.fit->beta <= hi.fit->beta + tolerance;
}

}  // namespace detail

/// Runs the full dyadic-grid, multi-seed experiment and fits all requested
/// exponents. Every cell generates a fresh realization of 2n steps from
/// seed derive_seed(seed_base, seed_index); the same seed is reused across
/// grid sizes, so larger blocks extend smaller ones and the mean curves
/// are coupled rather than independently noisy.
///
/// The facts term reads the pre-encoding pair stream and is only defined
/// for Santa Fe sources; requesting it for a Markov source is an error.
inline SandwichReport run_sandwich(const SourceSpec& source,
                                   std::span<const std::uint64_t> grid,
                                   std::uint32_t seeds, std::uint64_t seed_base,
                                   const CodeLengthOracle& oracle,
                                   unsigned measures = kMeasureAll,
                                   unsigned workers = 0) {
  detail::validate_grid(grid);
  if (seeds == 0) throw std::invalid_argument("run_sandwich: seeds must be >= 1");
  if ((measures & kMeasureAll) == 0)
    throw std::invalid_argument("run_sandwich: no measures requested");
  if ((measures & kMeasureFacts) && source.kind != SourceSpec::Kind::santa_fe)
    throw std::invalid_argument(
        "run_sandwich: facts measurement requires a Santa Fe source");

  SandwichReport report;
  report.source = source.name;
  report.oracle = oracle.name;
  report.grid.assign(grid.begin(), grid.end());
  report.seeds = seeds;
  report.seed_base = seed_base;
  report.measures = measures;
  report.cells.resize(grid.size() * seeds);

  const std::uint64_t n_max = grid.back();
  const bool symbolic = (measures & kMeasureSymbolic) != 0;
  std::optional<ZipfSampler> sampler;
  if (source.kind == SourceSpec::Kind::santa_fe) sampler.emplace(source.alpha);

  detail::parallel_for(seeds, workers, [&](std::size_t seed_idx) {
    const std::uint64_t sample_seed = derive_seed(seed_base, seed_idx);
    const auto realization = detail::realize(
        source, sampler ? &*sampler : nullptr, 2 * n_max, sample_seed);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const std::uint64_t n = grid[g];
      SandwichCell cell;
      cell.n = n;
      cell.seed_index = static_cast<std::uint32_t>(seed_idx);
      if (measures & kMeasureFacts) {
        std::vector<std::uint64_t> ks(n);
        for (std::uint64_t i = 0; i < n; ++i) ks[i] = realization.pairs[i].k;
        cell.facts = static_cast<double>(count_facts(ks));
      }
      if (symbolic) {
        const SymbolSeq first = detail::block_of(source, realization, 0, n);
        cell.block_len = first.size();
        const double code_first = oracle(first);
        if (measures & kMeasureCode) cell.code_len = code_first;
        if (measures & kMeasureMi) {
          const SymbolSeq second = detail::block_of(source, realization, n, n);
          cell.mi = code_first + oracle(second) - oracle(concat(first, second));
        }
        if (measures & kMeasureWords) {
          const std::uint32_t m = markov_order_given_code_len(first, code_first);
          cell.order = m;
          cell.vocab = static_cast<double>(vocab_proxy(first, m));
        }
      }
      report.cells[g * seeds + seed_idx] = std::move(cell);
    }
  });

  report.facts_term.term = "facts";
  report.redundancy_term.term = "redundancy";
  report.mi_term.term = "mi";
  report.words_term.term = "words";

  std::vector<double> mean_block_len(grid.size(), 0.0);
  std::vector<double> mean_code(grid.size(), 0.0);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const std::size_t offset = g * seeds;
    if (measures & kMeasureFacts)
      report.facts_term.mean_points.emplace_back(
          grid[g], detail::mean_of(report.cells, offset, seeds, &SandwichCell::facts));
    if (measures & kMeasureCode) {
      mean_code[g] = detail::mean_of(report.cells, offset, seeds, &SandwichCell::code_len);
      double len_sum = 0.0;
      for (std::size_t i = 0; i < seeds; ++i)
        len_sum += static_cast<double>(report.cells[offset + i].block_len);
      mean_block_len[g] = len_sum / static_cast<double>(seeds);
    }
    if (measures & kMeasureMi)
      report.mi_term.mean_points.emplace_back(
          grid[g], detail::mean_of(report.cells, offset, seeds, &SandwichCell::mi));
    if (measures & kMeasureWords)
      report.words_term.mean_points.emplace_back(
          grid[g], detail::mean_of(report.cells, offset, seeds, &SandwichCell::vocab));
  }
  if (measures & kMeasureCode) {
    // Plug-in rate at the largest block; the redundancy curve is measured
    // against this surrogate for the unknown true rate h.
    report.h_hat = mean_code.back() / mean_block_len.back();
    for (std::size_t g = 0; g < grid.size(); ++g)
      report.redundancy_term.mean_points.emplace_back(
          grid[g], mean_code[g] - report.h_hat * mean_block_len[g]);
  }

  if (measures & kMeasureFacts) detail::fit_term(report.facts_term);
  if (measures & kMeasureCode) detail::fit_term(report.redundancy_term);
  if (measures & kMeasureMi) detail::fit_term(report.mi_term);
  if (measures & kMeasureWords) detail::fit_term(report.words_term);

  report.ord_facts_le_redundancy = detail::exponents_ordered(
      report.facts_term, report.redundancy_term, report.tolerance);
  report.ord_redundancy_le_mi = detail::exponents_ordered(
      report.redundancy_term, report.mi_term, report.tolerance);
  report.ord_mi_le_words =
      detail::exponents_ordered(report.mi_term, report.words_term, report.tolerance);
  report.ord_facts_le_words =
      detail::exponents_ordered(report.facts_term, report.words_term, report.tolerance);
  return report;
}

/// Markov order estimates per (n, seed), with the recovery fraction when
/// the source has a known finite order.
struct OrderScanReport {
  std::string source;
  std::string oracle;
  std::vector<std::uint64_t> grid;
  std::uint32_t seeds = 0;
  std::uint64_t seed_base = 0;
  std::optional<std::uint32_t> true_order;

  std::vector<std::vector<std::uint32_t>> orders;  // [grid index][seed index]
  std::vector<double> median_order;                // per grid point
  std::vector<double> fraction_correct;            // per grid point, if true_order
};

inline OrderScanReport run_markov_consistency(const SourceSpec& source,
                                              std::span<const std::uint64_t> grid,
                                              std::uint32_t seeds,
                                              std::uint64_t seed_base,
                                              const CodeLengthOracle& oracle,
                                              unsigned workers = 0) {
  detail::validate_grid(grid);
  if (seeds == 0)
    throw std::invalid_argument("run_markov_consistency: seeds must be >= 1");

  OrderScanReport report;
  report.source = source.name;
  report.oracle = oracle.name;
  report.grid.assign(grid.begin(), grid.end());
  report.seeds = seeds;
  report.seed_base = seed_base;
  if (source.kind == SourceSpec::Kind::markov)
    report.true_order = source.markov_spec.order;
  report.orders.assign(grid.size(), std::vector<std::uint32_t>(seeds, 0));

  std::optional<ZipfSampler> sampler;
  if (source.kind == SourceSpec::Kind::santa_fe) sampler.emplace(source.alpha);

  detail::parallel_for(seeds, workers, [&](std::size_t seed_idx) {
    const std::uint64_t sample_seed = derive_seed(seed_base, seed_idx);
    const auto realization = detail::realize(
        source, sampler ? &*sampler : nullptr, grid.back(), sample_seed);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const SymbolSeq block = detail::block_of(source, realization, 0, grid[g]);
      report.orders[g][seed_idx] = markov_order(block, oracle);
    }
  });

  for (std::size_t g = 0; g < grid.size(); ++g) {
    std::vector<std::uint32_t> sorted = report.orders[g];
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    report.median_order.push_back(
        sorted.size() % 2 == 1
            ? sorted[mid]
            : (static_cast<double>(sorted[mid - 1]) + sorted[mid]) / 2.0);
    if (report.true_order) {
      std::size_t hits = 0;
      for (std::uint32_t m : report.orders[g])
        if (m == *report.true_order) ++hits;
      report.fraction_correct.push_back(static_cast<double>(hits) /
                                        static_cast<double>(seeds));
    }
  }
  return report;
}

/// Type/token growth and rank/frequency statistics of a token stream.
struct HeapsZipfReport {
  std::uint64_t tokens = 0;
  std::uint64_t types = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> type_token_curve;
  std::vector<std::pair<std::string, std::uint64_t>> rank_freq;
  HilbergFit heaps_fit;
  double zipf_slope = std::numeric_limits<double>::quiet_NaN();
  std::size_t zipf_points_used = 0;
  std::uint64_t zipf_min_freq = 5;
};

/// Heaps' law curve (distinct types at dyadic token prefixes, plus the full
/// length when it is not dyadic) and the Zipf rank-frequency regression
/// over ranks with frequency >= 5.
inline HeapsZipfReport heaps_zipf_analysis(std::span<const std::string> tokens) {
  if (tokens.empty())
    throw InsufficientData("heaps_zipf_analysis: no tokens");

  HeapsZipfReport report;
  report.tokens = tokens.size();

  std::unordered_set<std::string_view> seen;
  seen.reserve(tokens.size());
  std::uint64_t next_mark = 1;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    seen.insert(tokens[i]);
    if (i + 1 == next_mark) {
      report.type_token_curve.emplace_back(i + 1, seen.size());
      next_mark *= 2;
    }
  }
  if (report.type_token_curve.empty() ||
      report.type_token_curve.back().first != tokens.size())
    report.type_token_curve.emplace_back(tokens.size(), seen.size());
  report.types = seen.size();

  std::unordered_map<std::string_view, std::uint64_t> freq;
  freq.reserve(seen.size());
  for (const auto& t : tokens) ++freq[t];
  report.rank_freq.reserve(freq.size());
  for (const auto& [tok, c] : freq) report.rank_freq.emplace_back(std::string(tok), c);
  std::sort(report.rank_freq.begin(), report.rank_freq.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });

  std::vector<std::pair<std::uint64_t, double>> curve;
  curve.reserve(report.type_token_curve.size());
  for (const auto& [n, v] : report.type_token_curve)
    curve.emplace_back(n, static_cast<double>(v));
  report.heaps_fit = hilberg_fit(curve);

  std::vector<std::pair<std::uint64_t, double>> zipf_points;
  for (std::size_t r = 0; r < report.rank_freq.size(); ++r) {
    if (report.rank_freq[r].second < report.zipf_min_freq) break;
    zipf_points.emplace_back(r + 1, static_cast<double>(report.rank_freq[r].second));
  }
  report.zipf_points_used = zipf_points.size();
  if (zipf_points.size() >= 2) {
    const LogLogFit fit = loglog_fit(zipf_points, 2);
    report.zipf_slope = fit.slope;
  }
  return report;
}

/// Block mutual information J(x_1^n ; x_{n+1}^{2n}) over a dyadic grid of
/// prefix sizes of one fixed sequence, with its fitted exponent. Used for
/// real corpora, where there is a single realization and no seed average.
struct MiScanReport {
  std::string oracle;
  std::vector<std::pair<std::uint64_t, double>> points;
  std::optional<HilbergFit> fit;
  std::string note;
};

inline MiScanReport run_mi_scaling(const SymbolSeq& x, const CodeLengthOracle& oracle,
                                   std::uint64_t n_min = 1024) {
  if (n_min == 0) throw std::invalid_argument("run_mi_scaling: n_min must be >= 1");
  MiScanReport report;
  report.oracle = oracle.name;
  for (std::uint64_t n = n_min; 2 * n <= x.size(); n *= 2) {
    const SymbolSeq first = x.subseq(0, n);
    const SymbolSeq second = x.subseq(n, n);
    report.points.emplace_back(
        n, oracle(first) + oracle(second) - oracle(x.subseq(0, 2 * n)));
  }
  try {
    report.fit = hilberg_fit(report.points);
  } catch (const InsufficientData& e) {
    report.note = e.what();
  }
  return report;
}

}  // namespace fw
