#include "domset/graph.hpp"

#include <stdexcept>
#include <string>

#include "domset/rng.hpp"
#include "mask_util.hpp"

namespace domset {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), Bitset(n));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  adj_[static_cast<std::size_t>(u)].set(v);
  adj_[static_cast<std::size_t>(v)].set(u);
}

bool Graph::adjacent(int u, int v) const {
  return adj_[static_cast<std::size_t>(u)].test(v);
}

Bitset Graph::closed_neighborhood(int v) const {
  Bitset b = adj_[static_cast<std::size_t>(v)];
  b.set(v);
  return b;
}

std::int64_t Graph::edge_count() const {
  std::int64_t deg_sum = 0;
  for (const auto& row : adj_) deg_sum += row.count();
  return deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int u = 0; u < n_; ++u) {
    adj_[static_cast<std::size_t>(u)].for_each_set([&](int v) {
      if (v > u) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph gnp_sample(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gnp_sample: negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp_sample: p must be in [0,1]");
  Graph g(n);
  SplitMix64 rng(seed);
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      if (rng.next_unit() < p) g.add_edge(v, w);
    }
  }
  return g;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  const int n = g.order();
  if (s.size() != n) throw std::invalid_argument("is_dominating: set size mismatch");
  Bitset cover = s;
  s.for_each_set([&](int v) { cover |= g.neighbors(v); });
  return cover.all();
}

DominationOracleResult domination_number_oracle(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("domination_number_oracle: need n >= 1");
  if (n > kOracleMaxN)
    throw std::invalid_argument("domination_number_oracle: n exceeds guard limit " +
                                std::to_string(kOracleMaxN));

  const auto masks = detail::closed_masks(g);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::uint64_t checked = 0;
  for (int k = 1; k <= n; ++k) {
    // Gosper's hack over all k-subsets in increasing numeric order.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      ++checked;
      if (detail::mask_dominates(masks, s, full)) return {k, detail::mask_to_set(s, n), checked};
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  // V always dominates, so the k = n pass cannot miss.
  return {n, Bitset::ones(n), checked};
}

VertexSet maximal_independent_set(const Graph& g, std::span<const int> order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("maximal_independent_set: order has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("maximal_independent_set: order is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  VertexSet result(n);
  for (int v : order) {
    if (!g.neighbors(v).intersects(result)) result.set(v);
  }
  return result;
}

}  // namespace domset
