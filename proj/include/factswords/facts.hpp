#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace fw {

/// The fact counter U for the pair-reading decoder: the smallest positive
/// integer absent from the observed fact indices. A text with U = u has
/// described exactly the first u - 1 facts.
inline std::uint64_t count_facts(std::span<const std::uint64_t> ks) {
  // U <= ks.size() + 1, so indices above that bound cannot matter.
  const std::uint64_t bound = ks.size() + 1;
  std::vector<bool> seen(bound + 1, false);
  for (std::uint64_t k : ks) {
    if (k == 0) throw std::invalid_argument("count_facts: fact indices start at 1");
    if (k <= bound) seen[k] = true;
  }
  for (std::uint64_t u = 1; u <= bound; ++u)
    if (!seen[u]) return u;
  return bound + 1;  // unreachable: some index in [1, bound] is missing
}

}  // namespace fw
