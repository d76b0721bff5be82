#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace fw {

/// A finite-alphabet symbol sequence. Symbols are dense ids in
/// [0, alphabet_size); alphabet_size is declared, not inferred, so that
/// code lengths are comparable across sequences from the same source.
struct SymbolSeq {
  std::uint32_t alphabet_size = 2;
  std::vector<std::uint32_t> symbols;

  std::size_t size() const { return symbols.size(); }
  bool empty() const { return symbols.empty(); }

  std::span<const std::uint32_t> span() const { return symbols; }

  /// Copy of symbols [pos, pos + count).
  SymbolSeq subseq(std::size_t pos, std::size_t count) const {
    if (pos > symbols.size() || count > symbols.size() - pos)
      throw std::out_of_range("SymbolSeq::subseq: range outside sequence");
    SymbolSeq out;
    out.alphabet_size = alphabet_size;
    out.symbols.assign(symbols.begin() + static_cast<std::ptrdiff_t>(pos),
                       symbols.begin() + static_cast<std::ptrdiff_t>(pos + count));
    return out;
  }

  void validate() const {
    if (alphabet_size < 2)
      throw std::invalid_argument("SymbolSeq: alphabet_size must be >= 2");
    for (std::uint32_t s : symbols)
      if (s >= alphabet_size)
        throw std::invalid_argument("SymbolSeq: symbol out of alphabet range");
  }
};

inline SymbolSeq make_seq(std::uint32_t alphabet_size,
                          std::vector<std::uint32_t> symbols) {
  SymbolSeq x;
  x.alphabet_size = alphabet_size;
  x.symbols = std::move(symbols);
  x.validate();
  return x;
}

/// u followed by v. Alphabets must agree.
inline SymbolSeq concat(const SymbolSeq& u, const SymbolSeq& v) {
  if (u.alphabet_size != v.alphabet_size)
    throw std::invalid_argument("concat: alphabet_size mismatch");
  SymbolSeq out;
  out.alphabet_size = u.alphabet_size;
  out.symbols.reserve(u.symbols.size() + v.symbols.size());
  out.symbols = u.symbols;
  out.symbols.insert(out.symbols.end(), v.symbols.begin(), v.symbols.end());
  return out;
}

}  // namespace fw
