#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fw {

/// Raised when an estimator receives too few usable points.
class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordinary least squares on (log2 n, log2 s).
struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  std::size_t points_used = 0;
};

/// Fitted power-law exponent over a grid of block sizes, clipped at zero
/// the way Hilberg exponents are.
struct HilbergFit {
  double beta = 0.0;
  double beta_stderr = 0.0;
  std::uint64_t n_min = 0;
  std::uint64_t n_max = 0;
  std::size_t points_used = 0;
  std::size_t points_dropped = 0;  // nonpositive s values, excluded from the fit
  double intercept = 0.0;          // log2 of the fitted multiplicative constant
};

/// Least-squares line through (log2 n, log2 s) for the points with s > 0
/// and n >= 1. Throws InsufficientData when fewer than `min_points` remain.
inline LogLogFit loglog_fit(std::span<const std::pair<std::uint64_t, double>> points,
                            std::size_t min_points = 3) {
  std::vector<std::pair<double, double>> logs;
  logs.reserve(points.size());
  for (const auto& [n, s] : points)
    if (n >= 1 && s > 0.0)
      logs.emplace_back(std::log2(static_cast<double>(n)), std::log2(s));
  if (logs.size() < min_points)
    throw InsufficientData("loglog_fit: fewer than " + std::to_string(min_points) +
                           " usable points");
  double mx = 0.0, my = 0.0;
  for (const auto& [lx, ly] : logs) {
    mx += lx;
    my += ly;
  }
  mx /= static_cast<double>(logs.size());
  my /= static_cast<double>(logs.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [lx, ly] : logs) {
    sxx += (lx - mx) * (lx - mx);
    sxy += (lx - mx) * (ly - my);
  }
  if (sxx <= 0.0)
    throw InsufficientData("loglog_fit: degenerate abscissa (all n equal)");
  LogLogFit fit;
  fit.points_used = logs.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0.0;
  for (const auto& [lx, ly] : logs) {
    const double r = ly - fit.intercept - fit.slope * lx;
    sse += r * r;
  }
  if (logs.size() > 2)
    fit.slope_stderr = std::sqrt(sse / static_cast<double>(logs.size() - 2) / sxx);
  return fit;
}

/// Power-law exponent of s(n) on a log-log grid, clipped below at zero.
/// Points with s <= 0 are dropped (and counted), not errors: proxy mutual
/// information estimates go negative at small n.
inline HilbergFit hilberg_fit(std::span<const std::pair<std::uint64_t, double>> points) {
  std::size_t dropped = 0;
  std::uint64_t n_min = 0, n_max = 0;
  for (const auto& [n, s] : points) {
    if (!(n >= 1 && s > 0.0)) {
      ++dropped;
      continue;
    }
    if (n_min == 0 || n < n_min) n_min = n;
    if (n > n_max) n_max = n;
  }
  const LogLogFit ls = loglog_fit(points);
  HilbergFit fit;
  fit.beta = ls.slope > 0.0 ? ls.slope : 0.0;
  fit.beta_stderr = ls.slope_stderr;
  fit.n_min = n_min;
  fit.n_max = n_max;
  fit.points_used = ls.points_used;
  fit.points_dropped = dropped;
  fit.intercept = ls.intercept;
  return fit;
}

}  // namespace fw
