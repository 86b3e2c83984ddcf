#ifndef DOMSET_GRAPH_HPP
#define DOMSET_GRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "domset/bitset.hpp"

namespace domset {

using VertexSet = Bitset;

// Undirected simple graph with per-vertex adjacency bit rows.
// Immutable in practice once built; safe to share across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }
  const Bitset& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  // neighbors(v) plus v itself
  Bitset closed_neighborhood(int v) const;

  std::int64_t edge_count() const;

  // Edges as (u, v) pairs with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  std::vector<Bitset> adj_;
};

// Seeded G(n,p) sample. One splitmix64 draw is consumed per unordered pair,
// in ascending (v, w) order with v < w, whether or not the edge is taken, so
// identical (n, p, seed) give bit-identical graphs everywhere.
Graph gnp_sample(int n, double p, std::uint64_t seed);

// True iff every vertex is in s or adjacent to a member of s.
bool is_dominating(const Graph& g, const VertexSet& s);

inline constexpr int kOracleMaxN = 25;

struct DominationOracleResult {
  int size = 0;
  VertexSet witness;
  std::uint64_t subsets_checked = 0;
};

// Ground-truth gamma(G): enumerates subsets by increasing cardinality and
// returns the first dominating set found. Requires 1 <= n <= kOracleMaxN.
DominationOracleResult domination_number_oracle(const Graph& g);

// Greedy pass in the given vertex order; the result is independent, maximal,
// and therefore dominating. `order` must be a permutation of 0..n-1.
VertexSet maximal_independent_set(const Graph& g, std::span<const int> order);

}  // namespace domset

#endif
