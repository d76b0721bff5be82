#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "factswords/experiments.hpp"
#include "factswords/version.hpp"

namespace fw {

enum class ReportFormat { table, summary };

inline ReportFormat parse_report_format(std::string_view name) {
  if (name == "table") return ReportFormat::table;
  if (name == "summary") return ReportFormat::summary;
  throw std::invalid_argument("unknown report format: " + std::string(name));
}

namespace detail {

/// Reals are printed with 9 significant digits; NaN renders as "na".
inline std::string fmt_real(double v) {
  if (std::isnan(v)) return "na";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

inline std::string fmt_flag(const std::optional<bool>& b) {
  if (!b) return "na";
  return *b ? "true" : "false";
}

inline std::string fmt_grid(std::span<const std::uint64_t> grid) {
  std::string out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(grid[i]);
  }
  return out;
}

inline void append_term(std::ostringstream& os, const TermSummary& term,
                        bool measured) {
  const std::string& t = term.term;
  if (!measured) {
    os << t << "_exp=na\n";
    return;
  }
  if (term.fit) {
    os << t << "_exp=" << fmt_real(term.fit->beta) << "\n";
    os << t << "_se=" << fmt_real(term.fit->beta_stderr) << "\n";
    os << t << "_points=" << term.fit->points_used << "\n";
    os << t << "_dropped=" << term.fit->points_dropped << "\n";
  } else {
    os << t << "_exp=na\n";
    os << t << "_note=" << term.note << "\n";
  }
  os << t << "_curve=";
  for (std::size_t i = 0; i < term.mean_points.size(); ++i) {
    if (i) os << " ";
    os << term.mean_points[i].first << ":" << fmt_real(term.mean_points[i].second);
  }
  os << "\n";
}

}  // namespace detail

/// Summary: line-oriented key=value block with a full configuration echo.
/// Table: TSV with one row per (n, seed) cell. Both renderings are pure
/// functions of the report, so identical runs emit identical bytes.
inline std::string render_sandwich(const SandwichReport& r, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::table) {
    os << "n\tseed\tfacts\tcode_len\tmi\tvocab\torder\n";
    for (const auto& c : r.cells) {
      os << c.n << "\t" << c.seed_index << "\t" << detail::fmt_real(c.facts) << "\t"
         << detail::fmt_real(c.code_len) << "\t" << detail::fmt_real(c.mi) << "\t"
         << detail::fmt_real(c.vocab) << "\t";
      if (c.order < 0)
        os << "na";
      else
        os << c.order;
      os << "\n";
    }
    return os.str();
  }
  os << "# " << kToolName << " sandwich summary\n";
  os << "version=" << kVersion << "\n";
  os << "source=" << r.source << "\n";
  os << "oracle=" << r.oracle << "\n";
  os << "grid=" << detail::fmt_grid(r.grid) << "\n";
  os << "seeds=" << r.seeds << "\n";
  os << "seed_base=" << r.seed_base << "\n";
  os << "tolerance=" << detail::fmt_real(r.tolerance) << "\n";
  os << "h_hat=" << detail::fmt_real(r.h_hat) << "\n";
  detail::append_term(os, r.facts_term, r.measures & kMeasureFacts);
  detail::append_term(os, r.redundancy_term, r.measures & kMeasureCode);
  detail::append_term(os, r.mi_term, r.measures & kMeasureMi);
  detail::append_term(os, r.words_term, r.measures & kMeasureWords);
  os << "order_facts_le_redundancy=" << detail::fmt_flag(r.ord_facts_le_redundancy) << "\n";
  os << "order_redundancy_le_mi=" << detail::fmt_flag(r.ord_redundancy_le_mi) << "\n";
  os << "order_mi_le_words=" << detail::fmt_flag(r.ord_mi_le_words) << "\n";
  os << "order_facts_le_words=" << detail::fmt_flag(r.ord_facts_le_words) << "\n";
  return os.str();
}

inline std::string render_order_scan(const OrderScanReport& r, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::table) {
    os << "n\tseed\torder\n";
    for (std::size_t g = 0; g < r.grid.size(); ++g)
      for (std::size_t s = 0; s < r.orders[g].size(); ++s)
        os << r.grid[g] << "\t" << s << "\t" << r.orders[g][s] << "\n";
    return os.str();
  }
  os << "# " << kToolName << " consistency summary\n";
  os << "version=" << kVersion << "\n";
  os << "source=" << r.source << "\n";
  os << "oracle=" << r.oracle << "\n";
  os << "grid=" << detail::fmt_grid(r.grid) << "\n";
  os << "seeds=" << r.seeds << "\n";
  os << "seed_base=" << r.seed_base << "\n";
  if (r.true_order)
    os << "true_order=" << *r.true_order << "\n";
  else
    os << "true_order=na\n";
  for (std::size_t g = 0; g < r.grid.size(); ++g) {
    os << "median_order@" << r.grid[g] << "=" << detail::fmt_real(r.median_order[g])
       << "\n";
    if (r.true_order)
      os << "fraction_correct@" << r.grid[g] << "="
         << detail::fmt_real(r.fraction_correct[g]) << "\n";
  }
  return os.str();
}

inline std::string render_heaps_zipf(const HeapsZipfReport& r, ReportFormat format,
                                     std::string_view input_name) {
  std::ostringstream os;
  if (format == ReportFormat::table) {
    os << "rank\ttoken\tfreq\n";
    for (std::size_t i = 0; i < r.rank_freq.size(); ++i)
      os << (i + 1) << "\t" << r.rank_freq[i].first << "\t" << r.rank_freq[i].second
         << "\n";
    return os.str();
  }
  os << "# " << kToolName << " corpus summary\n";
  os << "version=" << kVersion << "\n";
  os << "input=" << input_name << "\n";
  os << "mode=word-tokens\n";
  os << "tokens=" << r.tokens << "\n";
  os << "types=" << r.types << "\n";
  os << "heaps_exp=" << detail::fmt_real(r.heaps_fit.beta) << "\n";
  os << "heaps_se=" << detail::fmt_real(r.heaps_fit.beta_stderr) << "\n";
  os << "zipf_slope=" << detail::fmt_real(r.zipf_slope) << "\n";
  os << "zipf_points=" << r.zipf_points_used << "\n";
  os << "zipf_min_freq=" << r.zipf_min_freq << "\n";
  os << "type_token_curve=";
  for (std::size_t i = 0; i < r.type_token_curve.size(); ++i) {
    if (i) os << " ";
    os << r.type_token_curve[i].first << ":" << r.type_token_curve[i].second;
  }
  os << "\n";
  return os.str();
}

inline std::string render_mi_scan(const MiScanReport& r, std::string_view input_name,
                                  std::string_view mode, std::uint64_t n,
                                  std::uint32_t alphabet) {
  std::ostringstream os;
  os << "# " << kToolName << " corpus summary\n";
  os << "version=" << kVersion << "\n";
  os << "input=" << input_name << "\n";
  os << "mode=" << mode << "\n";
  os << "n=" << n << "\n";
  os << "alphabet=" << alphabet << "\n";
  os << "oracle=" << r.oracle << "\n";
  if (r.fit) {
    os << "mi_exp=" << detail::fmt_real(r.fit->beta) << "\n";
    os << "mi_se=" << detail::fmt_real(r.fit->beta_stderr) << "\n";
    os << "mi_points=" << r.fit->points_used << "\n";
    os << "mi_dropped=" << r.fit->points_dropped << "\n";
  } else {
    os << "mi_exp=na\n";
    os << "mi_note=" << r.note << "\n";
  }
  os << "mi_curve=";
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    if (i) os << " ";
    os << r.points[i].first << ":" << detail::fmt_real(r.points[i].second);
  }
  os << "\n";
  return os.str();
}

inline void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("error while writing: " + path);
}

}  // namespace fw
