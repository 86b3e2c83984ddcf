#ifndef DOMSET_SRC_MASK_UTIL_HPP
#define DOMSET_SRC_MASK_UTIL_HPP

// Internal single-word helpers for the n <= 64 fast paths.

#include <bit>
#include <cstdint>
#include <vector>

#include "domset/graph.hpp"

namespace domset::detail {

// Closed neighborhoods packed into one word per vertex.
inline std::vector<std::uint64_t> closed_masks(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    masks[static_cast<std::size_t>(v)] = g.neighbors(v).word(0) | (std::uint64_t{1} << v);
  return masks;
}

inline bool mask_dominates(const std::vector<std::uint64_t>& masks, std::uint64_t s,
                           std::uint64_t full) {
  std::uint64_t cover = 0;
  while (s) {
    cover |= masks[static_cast<std::size_t>(std::countr_zero(s))];
    if (cover == full) return true;
    s &= s - 1;
  }
  return cover == full;
}

inline Bitset mask_to_set(std::uint64_t m, int n) {
  Bitset b(n);
  while (m) {
    b.set(std::countr_zero(m));
    m &= m - 1;
  }
  return b;
}

}  // namespace domset::detail

#endif
