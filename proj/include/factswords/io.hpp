#pragma once

#include <cstdint>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "factswords/santa_fe.hpp"
#include "factswords/sequence.hpp"

namespace fw {

/// Sequence file: one header line "D=<int>", then one raw byte per symbol.
/// Only alphabets up to 256 fit this format.
inline void write_sequence_file(const std::string& path, const SymbolSeq& x) {
  x.validate();
  if (x.alphabet_size > 256)
    throw std::invalid_argument("write_sequence_file: alphabet too large for bytes");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "D=" << x.alphabet_size << "\n";
  std::string bytes(x.symbols.size(), '\0');
  for (std::size_t i = 0; i < x.symbols.size(); ++i)
    bytes[i] = static_cast<char>(static_cast<unsigned char>(x.symbols[i]));
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("error while writing: " + path);
}

inline SymbolSeq read_sequence_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::string header;
  if (!std::getline(in, header) || header.rfind("D=", 0) != 0)
    throw std::runtime_error("sequence file missing D= header: " + path);
  int d = 0;
  try {
    d = std::stoi(header.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error("bad alphabet size in header: " + path);
  }
  if (d < 2 || d > 256)
    throw std::runtime_error("alphabet size out of range in: " + path);
  SymbolSeq x;
  x.alphabet_size = static_cast<std::uint32_t>(d);
  char c;
  while (in.get(c))
    x.symbols.push_back(static_cast<unsigned char>(c));
  x.validate();
  return x;
}

/// Pair list: one line "k<TAB>bit" per pair.
inline void write_pairs_file(const std::string& path,
                             std::span<const SantaFePair> pairs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (const auto& p : pairs) out << p.k << "\t" << p.bit << "\n";
  if (!out) throw std::runtime_error("error while writing: " + path);
}

inline std::vector<SantaFePair> read_pairs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::vector<SantaFePair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("missing tab on line " + std::to_string(line_no) +
                               " of " + path);
    SantaFePair p;
    try {
      p.k = std::stoull(line.substr(0, tab));
      const int bit = std::stoi(line.substr(tab + 1));
      if (p.k == 0 || (bit != 0 && bit != 1)) throw std::invalid_argument("range");
      p.bit = static_cast<std::uint32_t>(bit);
    } catch (const std::exception&) {
      throw std::runtime_error("bad pair on line " + std::to_string(line_no) +
                               " of " + path);
    }
    pairs.push_back(p);
  }
  return pairs;
}

}  // namespace fw
