#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "factswords/sequence.hpp"

namespace fw {

enum class CorpusMode { bytes, chars, word_tokens };

struct CorpusConfig {
  std::string input_path;
  CorpusMode mode = CorpusMode::bytes;
  std::optional<std::uint64_t> max_symbols;       // cap on symbols / tokens
  std::optional<std::uint32_t> declared_alphabet; // bytes mode override
};

/// chars-mode result: the symbol sequence plus the id -> character map
/// needed to reconstruct the original stream.
struct CharIngest {
  SymbolSeq seq;
  std::vector<unsigned char> id_to_char;
};

/// Each byte is one symbol. D defaults to 256; a declared override must
/// still cover every byte that occurs.
inline SymbolSeq bytes_to_symbols(std::string_view data,
                                  std::optional<std::uint32_t> declared = {}) {
  const std::uint32_t d = declared.value_or(256);
  if (d < 2 || d > 256)
    throw std::invalid_argument("bytes mode: alphabet size must be in [2, 256]");
  SymbolSeq x;
  x.alphabet_size = d;
  x.symbols.reserve(data.size());
  for (unsigned char c : data) {
    if (c >= d)
      throw std::invalid_argument("bytes mode: byte value exceeds declared alphabet");
    x.symbols.push_back(c);
  }
  return x;
}

/// Each distinct character gets a dense id in first-occurrence order.
inline CharIngest chars_to_symbols(std::string_view data) {
  CharIngest out;
  std::vector<std::int32_t> id_of(256, -1);
  out.seq.symbols.reserve(data.size());
  for (unsigned char c : data) {
    if (id_of[c] < 0) {
      id_of[c] = static_cast<std::int32_t>(out.id_to_char.size());
      out.id_to_char.push_back(c);
    }
    out.seq.symbols.push_back(static_cast<std::uint32_t>(id_of[c]));
  }
  // A one-character stream still needs a valid binary alphabet.
  out.seq.alphabet_size =
      std::max<std::uint32_t>(2, static_cast<std::uint32_t>(out.id_to_char.size()));
  return out;
}

/// Whitespace-delimited tokens, lowercased, with leading/trailing
/// punctuation stripped. Deliberately naive: orthographic tokens are all
/// the Heaps/Zipf reports need.
inline std::vector<std::string> tokenize_words(std::string_view data) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < data.size()) {
    while (i < data.size() && std::isspace(static_cast<unsigned char>(data[i]))) ++i;
    std::size_t j = i;
    while (j < data.size() && !std::isspace(static_cast<unsigned char>(data[j]))) ++j;
    if (j > i) {
      std::size_t b = i, e = j;
      while (b < e && std::ispunct(static_cast<unsigned char>(data[b]))) ++b;
      while (e > b && std::ispunct(static_cast<unsigned char>(data[e - 1]))) --e;
      if (e > b) {
        std::string tok;
        tok.reserve(e - b);
        for (std::size_t p = b; p < e; ++p)
          tok.push_back(static_cast<char>(
              std::tolower(static_cast<unsigned char>(data[p]))));
        tokens.push_back(std::move(tok));
      }
    }
    i = j;
  }
  return tokens;
}

inline std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof())
    throw std::runtime_error("error while reading: " + path);
  std::string data = std::move(buf).str();
  if (data.empty()) throw std::runtime_error("input file is empty: " + path);
  return data;
}

/// What ingest_corpus produced; exactly one of seq/tokens is filled,
/// matching the requested mode.
struct IngestResult {
  CorpusMode mode = CorpusMode::bytes;
  std::optional<SymbolSeq> seq;
  std::vector<unsigned char> id_to_char;  // chars mode only
  std::vector<std::string> tokens;        // word-tokens mode only
};

inline IngestResult ingest_corpus(const CorpusConfig& config) {
  std::string data = read_file_bytes(config.input_path);
  IngestResult out;
  out.mode = config.mode;
  switch (config.mode) {
    case CorpusMode::bytes: {
      if (config.max_symbols && data.size() > *config.max_symbols)
        data.resize(*config.max_symbols);
      out.seq = bytes_to_symbols(data, config.declared_alphabet);
      break;
    }
    case CorpusMode::chars: {
      if (config.max_symbols && data.size() > *config.max_symbols)
        data.resize(*config.max_symbols);
      auto ingest = chars_to_symbols(data);
      out.seq = std::move(ingest.seq);
      out.id_to_char = std::move(ingest.id_to_char);
      break;
    }
    case CorpusMode::word_tokens: {
      out.tokens = tokenize_words(data);
      if (config.max_symbols && out.tokens.size() > *config.max_symbols)
        out.tokens.resize(*config.max_symbols);
      if (out.tokens.empty())
        throw std::runtime_error("no tokens found in: " + config.input_path);
      break;
    }
  }
  return out;
}

}  // namespace fw
