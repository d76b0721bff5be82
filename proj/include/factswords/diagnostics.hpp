#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "factswords/hilberg.hpp"
#include "factswords/oracle.hpp"
#include "factswords/sequence.hpp"

namespace fw {

/// Empirical surrogates for the stationarity-style conditions a source
/// must satisfy before its exponents are comparable: a finite positive
/// complexity rate, complexity non-decreasing between adjacent blocks,
/// finite inverse rate, finite alphabet.
struct ConditionReport {
  double h_hat = 0.0;                 // plug-in code rate at the largest block
  std::uint32_t monotonicity_violations = 0;
  double h_inv_hat = 0.0;             // mean of n / code_len over the grid
  std::uint32_t alphabet_size = 0;
};

/// Computes the report from samples of one source at (dyadic) lengths.
/// For every distinct sample length 2n, compares the mean code length of
/// first halves against second halves; a larger first half counts as a
/// monotonicity violation.
inline ConditionReport condition_diagnostics(std::span<const SymbolSeq> samples,
                                             const CodeLengthOracle& oracle) {
  if (samples.empty())
    throw InsufficientData("condition_diagnostics: no samples");
  struct Halves {
    double first_sum = 0.0;
    double second_sum = 0.0;
    std::size_t count = 0;
  };
  ConditionReport report;
  report.alphabet_size = samples[0].alphabet_size;

  std::map<std::size_t, Halves> by_length;
  std::size_t longest = 0;
  double longest_code_sum = 0.0;
  std::size_t longest_count = 0;
  double inv_sum = 0.0;
  std::size_t inv_count = 0;

  for (const auto& x : samples) {
    if (x.empty()) continue;
    const double full = oracle(x);
    if (full > 0.0) {
      inv_sum += static_cast<double>(x.size()) / full;
      ++inv_count;
    }
    if (x.size() > longest) {
      longest = x.size();
      longest_code_sum = 0.0;
      longest_count = 0;
    }
    if (x.size() == longest) {
      longest_code_sum += full;
      ++longest_count;
    }
    if (x.size() >= 2) {
      const std::size_t half = x.size() / 2;
      auto& h = by_length[x.size()];
      h.first_sum += oracle(x.subseq(0, half));
      h.second_sum += oracle(x.subseq(half, half));
      ++h.count;
    }
  }
  if (longest == 0)
    throw InsufficientData("condition_diagnostics: all samples empty");

  report.h_hat = longest_code_sum / static_cast<double>(longest_count) /
                 static_cast<double>(longest);
  report.h_inv_hat = inv_count > 0 ? inv_sum / static_cast<double>(inv_count) : 0.0;
  for (const auto& [len, h] : by_length)
    if (h.first_sum > h.second_sum) ++report.monotonicity_violations;
  return report;
}

}  // namespace fw
