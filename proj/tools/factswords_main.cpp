// Command-line front end: source simulation, estimator runs, scaling
// experiments, and corpus statistics. One verb per workflow; every
// subcommand that takes seeds is byte-for-byte reproducible.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "factswords/factswords.hpp"

namespace {

struct SourceFlags {
  std::string source = "santa-fe";
  double alpha = 2.0;
  double flip_p = 0.1;
  std::uint32_t alphabet = 2;
  std::uint64_t fact_seed = 1;
};

void add_source_flags(CLI::App* cmd, SourceFlags& f,
                      const std::string& default_source) {
  f.source = default_source;
  cmd->add_option("--source", f.source, "Source kind")
      ->check(CLI::IsMember({"santa-fe", "santa-fe-bin", "flip-chain", "uniform"}))
      ->capture_default_str();
  cmd->add_option("--alpha", f.alpha, "Zipf exponent of the Santa Fe source (> 1)")
      ->capture_default_str();
  cmd->add_option("--flip-p", f.flip_p, "Flip probability of the order-1 chain")
      ->capture_default_str();
  cmd->add_option("--alphabet", f.alphabet, "Alphabet size of the uniform source")
      ->capture_default_str();
  cmd->add_option("--fact-seed", f.fact_seed, "Seed fixing the Santa Fe fact bits")
      ->capture_default_str();
}

fw::SourceSpec to_source_spec(const SourceFlags& f) {
  if (f.source == "santa-fe" || f.source == "santa-fe-bin")
    return fw::SourceSpec::santa_fe(f.alpha, f.fact_seed);
  if (f.source == "flip-chain") {
    char label[64];
    std::snprintf(label, sizeof label, "flip-chain(p=%g)", f.flip_p);
    return fw::SourceSpec::markov(fw::MarkovSpec::binary_flip(f.flip_p), label);
  }
  char label[64];
  std::snprintf(label, sizeof label, "uniform(D=%u)", f.alphabet);
  return fw::SourceSpec::markov(fw::MarkovSpec::uniform_iid(f.alphabet), label);
}

std::vector<std::uint64_t> make_grid(unsigned min_log2, unsigned max_log2) {
  if (min_log2 > max_log2)
    throw std::invalid_argument("--grid-min-log2 exceeds --grid-max-log2");
  std::vector<std::uint64_t> grid;
  for (unsigned lg = min_log2; lg <= max_log2; ++lg) grid.push_back(1ull << lg);
  return grid;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    fw::write_text_file(out, text);
}

int run_simulate(const SourceFlags& f, std::uint64_t steps, std::uint64_t seed,
                 const std::string& out) {
  if (f.source == "santa-fe") {
    fw::SantaFeParams params{f.alpha, seed, f.fact_seed};
    fw::write_pairs_file(out, fw::gen_santa_fe(params, steps));
    return 0;
  }
  if (f.source == "santa-fe-bin") {
    fw::SantaFeParams params{f.alpha, seed, f.fact_seed};
    fw::write_sequence_file(out, fw::binarize_santa_fe(fw::gen_santa_fe(params, steps)));
    return 0;
  }
  const fw::SourceSpec spec = to_source_spec(f);
  fw::write_sequence_file(out, fw::gen_markov(spec.markov_spec, steps, seed));
  return 0;
}

bool looks_like_sequence_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  char head[2] = {0, 0};
  in.read(head, 2);
  return head[0] == 'D' && head[1] == '=';
}

int run_analyze(const std::string& in, const std::string& oracle_name,
                std::optional<std::uint32_t> k, bool diagnostics,
                const std::string& out) {
  std::ostringstream os;
  os << "# " << fw::kToolName << " analysis\n";
  os << "version=" << fw::kVersion << "\n";
  os << "input=" << in << "\n";
  if (looks_like_sequence_file(in)) {
    const fw::SymbolSeq x = fw::read_sequence_file(in);
    if (x.empty()) throw std::runtime_error("sequence file has no symbols: " + in);
    const fw::CodeLengthOracle oracle = fw::make_oracle(oracle_name);
    const double code = oracle(x);
    const std::uint32_t m = fw::markov_order_given_code_len(x, code);
    os << "kind=sequence\n";
    os << "n=" << x.size() << "\n";
    os << "alphabet=" << x.alphabet_size << "\n";
    os << "oracle=" << oracle.name << "\n";
    os << "code_len=" << fw::detail::fmt_real(code) << "\n";
    os << "code_rate=" << fw::detail::fmt_real(code / static_cast<double>(x.size()))
       << "\n";
    os << "markov_order=" << m << "\n";
    os << "vocab=" << fw::vocab_proxy(x, m) << "\n";
    if (k) {
      os << "subword@" << *k << "=" << fw::subword_complexity(x, *k) << "\n";
      os << "neg_log_lk@" << *k << "=" << fw::detail::fmt_real(fw::neg_log_lk(x, *k))
         << "\n";
    }
    if (diagnostics) {
      // Source health over dyadic prefixes of the given sequence.
      std::vector<fw::SymbolSeq> samples;
      for (std::size_t len = 256; len <= x.size(); len *= 2)
        samples.push_back(x.subseq(0, len));
      if (samples.size() < 2)
        throw std::runtime_error("sequence too short for --diagnostics (need 512)");
      const auto report = fw::condition_diagnostics(samples, oracle);
      os << "h_hat=" << fw::detail::fmt_real(report.h_hat) << "\n";
      os << "h_inv_hat=" << fw::detail::fmt_real(report.h_inv_hat) << "\n";
      os << "monotonicity_violations=" << report.monotonicity_violations << "\n";
    }
  } else {
    const auto pairs = fw::read_pairs_file(in);
    std::vector<std::uint64_t> ks(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) ks[i] = pairs[i].k;
    const std::uint64_t u = fw::count_facts(ks);
    os << "kind=pairs\n";
    os << "n=" << pairs.size() << "\n";
    os << "facts_counter=" << u << "\n";
    os << "facts_described=" << (u - 1) << "\n";
  }
  emit(os.str(), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"facts-and-words scaling toolkit: simulates Santa Fe and Markov "
               "sources, estimates code lengths, Markov orders, subword "
               "vocabularies and power-law exponents"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "Generate a source realization file");
  SourceFlags sim_src;
  add_source_flags(sim, sim_src, "santa-fe");
  std::uint64_t sim_steps = 1 << 16;
  std::uint64_t sim_seed = 1;
  std::string sim_out;
  sim->add_option("-n,--steps", sim_steps,
                  "Steps to generate (pairs for santa-fe*, symbols otherwise)")
      ->capture_default_str();
  sim->add_option("--seed", sim_seed, "Sample seed")->capture_default_str();
  sim->add_option("--out", sim_out, "Output file")->required();

  // analyze
  auto* ana = app.add_subcommand("analyze", "Run estimators on a sequence or pair file");
  std::string ana_in, ana_oracle = "lz78", ana_out = "-";
  std::optional<std::uint32_t> ana_k;
  ana->add_option("--in", ana_in, "Input file (sequence or pair format)")->required();
  ana->add_option("--oracle", ana_oracle, "Code-length oracle")
      ->check(CLI::IsMember({"lz78", "two-part"}))
      ->capture_default_str();
  ana->add_option("--k", ana_k, "Also report subword complexity and -log2 ML at this order");
  bool ana_diagnostics = false;
  ana->add_flag("--diagnostics", ana_diagnostics,
                "Also report code-rate diagnostics over dyadic prefixes");
  ana->add_option("--out", ana_out, "Output file or - for stdout")->capture_default_str();

  // sandwich
  auto* sand = app.add_subcommand(
      "sandwich", "Estimate the facts/redundancy/information/words exponents");
  SourceFlags sand_src;
  add_source_flags(sand, sand_src, "santa-fe");
  unsigned sand_min = 10, sand_max = 16;
  std::uint32_t sand_seeds = 20;
  std::uint64_t sand_seed_base = 1;
  std::string sand_oracle = "lz78", sand_out = "-", sand_table;
  std::string sand_facts = "auto";
  unsigned sand_threads = 0;
  sand->add_option("--grid-min-log2", sand_min, "Smallest grid point, log2")
      ->capture_default_str();
  sand->add_option("--grid-max-log2", sand_max, "Largest grid point, log2")
      ->capture_default_str();
  sand->add_option("--seeds", sand_seeds, "Replicates per grid point")
      ->capture_default_str();
  sand->add_option("--seed-base", sand_seed_base, "Base seed for replicate derivation")
      ->capture_default_str();
  sand->add_option("--oracle", sand_oracle, "Code-length oracle")
      ->check(CLI::IsMember({"lz78", "two-part"}))
      ->capture_default_str();
  sand->add_option("--facts", sand_facts, "Measure the facts term")
      ->check(CLI::IsMember({"auto", "on", "off"}))
      ->capture_default_str();
  sand->add_option("--threads", sand_threads, "Worker threads (0 = hardware)")
      ->capture_default_str();
  sand->add_option("--out", sand_out, "Summary output file or - for stdout")
      ->capture_default_str();
  sand->add_option("--table", sand_table, "Optional per-cell TSV output file");

  // consistency
  auto* cons = app.add_subcommand(
      "consistency", "Markov order estimates across a dyadic grid");
  SourceFlags cons_src;
  add_source_flags(cons, cons_src, "flip-chain");
  unsigned cons_min = 10, cons_max = 16;
  std::uint32_t cons_seeds = 20;
  std::uint64_t cons_seed_base = 1;
  std::string cons_oracle = "lz78", cons_out = "-", cons_table;
  unsigned cons_threads = 0;
  cons->add_option("--grid-min-log2", cons_min, "Smallest grid point, log2")
      ->capture_default_str();
  cons->add_option("--grid-max-log2", cons_max, "Largest grid point, log2")
      ->capture_default_str();
  cons->add_option("--seeds", cons_seeds, "Replicates per grid point")
      ->capture_default_str();
  cons->add_option("--seed-base", cons_seed_base, "Base seed for replicate derivation")
      ->capture_default_str();
  cons->add_option("--oracle", cons_oracle, "Code-length oracle")
      ->check(CLI::IsMember({"lz78", "two-part"}))
      ->capture_default_str();
  cons->add_option("--threads", cons_threads, "Worker threads (0 = hardware)")
      ->capture_default_str();
  cons->add_option("--out", cons_out, "Summary output file or - for stdout")
      ->capture_default_str();
  cons->add_option("--table", cons_table, "Optional per-cell TSV output file");

  // corpus
  auto* corp = app.add_subcommand("corpus", "Heaps/Zipf or block-MI statistics of a text file");
  std::string corp_input, corp_mode = "word-tokens", corp_oracle = "lz78";
  std::string corp_out = "-", corp_table;
  std::optional<std::uint64_t> corp_max;
  std::optional<std::uint32_t> corp_alphabet;
  std::uint64_t corp_min_n = 1024;
  corp->add_option("--input", corp_input, "Text file to analyze")->required();
  corp->add_option("--mode", corp_mode,
                   "word-tokens: Heaps/Zipf; bytes or chars: block mutual information")
      ->check(CLI::IsMember({"word-tokens", "bytes", "chars"}))
      ->capture_default_str();
  corp->add_option("--oracle", corp_oracle, "Code-length oracle (bytes/chars modes)")
      ->check(CLI::IsMember({"lz78", "two-part"}))
      ->capture_default_str();
  corp->add_option("--max-symbols", corp_max, "Cap on ingested symbols or tokens");
  corp->add_option("--alphabet", corp_alphabet, "Declared alphabet override (bytes mode)");
  corp->add_option("--min-n", corp_min_n, "Smallest block size of the MI grid")
      ->capture_default_str();
  corp->add_option("--out", corp_out, "Summary output file or - for stdout")
      ->capture_default_str();
  corp->add_option("--table", corp_table, "Optional rank/frequency TSV (word-tokens mode)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) return run_simulate(sim_src, sim_steps, sim_seed, sim_out);

    if (*ana) return run_analyze(ana_in, ana_oracle, ana_k, ana_diagnostics, ana_out);

    if (*sand) {
      const fw::SourceSpec spec = to_source_spec(sand_src);
      unsigned measures = fw::kMeasureSymbolic;
      const bool is_santa_fe = spec.kind == fw::SourceSpec::Kind::santa_fe;
      if (sand_facts == "on" || (sand_facts == "auto" && is_santa_fe))
        measures |= fw::kMeasureFacts;
      const auto grid = make_grid(sand_min, sand_max);
      const auto report =
          fw::run_sandwich(spec, grid, sand_seeds, sand_seed_base,
                           fw::make_oracle(sand_oracle), measures, sand_threads);
      emit(fw::render_sandwich(report, fw::ReportFormat::summary), sand_out);
      if (!sand_table.empty())
        fw::write_text_file(sand_table,
                            fw::render_sandwich(report, fw::ReportFormat::table));
      return 0;
    }

    if (*cons) {
      const fw::SourceSpec spec = to_source_spec(cons_src);
      const auto grid = make_grid(cons_min, cons_max);
      const auto report =
          fw::run_markov_consistency(spec, grid, cons_seeds, cons_seed_base,
                                     fw::make_oracle(cons_oracle), cons_threads);
      emit(fw::render_order_scan(report, fw::ReportFormat::summary), cons_out);
      if (!cons_table.empty())
        fw::write_text_file(cons_table,
                            fw::render_order_scan(report, fw::ReportFormat::table));
      return 0;
    }

    if (*corp) {
      fw::CorpusConfig config;
      config.input_path = corp_input;
      config.max_symbols = corp_max;
      config.declared_alphabet = corp_alphabet;
      if (corp_mode == "word-tokens") {
        config.mode = fw::CorpusMode::word_tokens;
        const auto ingest = fw::ingest_corpus(config);
        const auto report = fw::heaps_zipf_analysis(ingest.tokens);
        emit(fw::render_heaps_zipf(report, fw::ReportFormat::summary, corp_input),
             corp_out);
        if (!corp_table.empty())
          fw::write_text_file(
              corp_table,
              fw::render_heaps_zipf(report, fw::ReportFormat::table, corp_input));
        return 0;
      }
      config.mode = corp_mode == "bytes" ? fw::CorpusMode::bytes : fw::CorpusMode::chars;
      const auto ingest = fw::ingest_corpus(config);
      const auto scan = fw::run_mi_scaling(*ingest.seq, fw::make_oracle(corp_oracle),
                                           corp_min_n);
      emit(fw::render_mi_scan(scan, corp_input, corp_mode, ingest.seq->size(),
                              ingest.seq->alphabet_size),
           corp_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << fw::kToolName << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
