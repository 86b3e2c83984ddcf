#ifndef DOMSET_BRANCH_BOUND_HPP
#define DOMSET_BRANCH_BOUND_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "domset/graph.hpp"
#include "domset/report.hpp"

namespace domset {

// A search-tree node: the first `depth` coordinates are decided and stored
// in `prefix`; every undecided coordinate counts as 1. The implied vertex
// set is therefore prefix | {depth, ..., n-1}.
struct BBNode {
  Bitset prefix;  // bits at index >= depth are clear
  int depth = 0;
  int potential = 0;  // popcount(prefix), kept in sync by the producers below
};

// Score u(x, delta) = |x| - n + delta, with |x| counting the decided ones
// plus the n - delta undecided coordinates. Algebraically this equals
// popcount(prefix); the definitional route is kept so tests can check the
// identity against the cached field.
int potential(const BBNode& node, int n);

// Vertices committed or still undecided: prefix | {depth..n-1}.
VertexSet node_set(const BBNode& node, int n);

// (left, right): left decides coordinate `depth` as 1 (same implied set),
// right decides it as 0 (implied set loses vertex `depth`).
std::pair<BBNode, BBNode> children(const BBNode& node, int n);

enum class TieRule { Deterministic, Random };
const char* to_string(TieRule tie);

struct BBOptions {
  TieRule tie = TieRule::Deterministic;
  std::uint64_t seed = 0;  // consumed only by the Random tie rule
  std::uint64_t max_expansions = 10'000'000;
  std::size_t frontier_limit = std::numeric_limits<std::size_t>::max();
  std::vector<BBNode>* trace = nullptr;  // popped nodes in pop order, optional
};

// Best-first search over the node tree: repeatedly pops a minimum-potential
// explorable node, counting one expansion per pop; the first depth-n pop is
// an optimal dominating set. Children whose implied set is not dominating
// are discarded permanently. Deterministic ties prefer greater depth, then
// the right child, then insertion order; Random ties draw a seeded 64-bit
// key per push.
SolveReport bb_solve(const Graph& g, const BBOptions& opts = {});

inline constexpr int kClassifyMaxN = 15;

struct NodeCensus {
  std::int64_t visited = 0;
  std::int64_t infeasible = 0;
  std::int64_t explorable = 0;
  std::int64_t hidden = 0;
  std::int64_t total() const { return visited + infeasible + explorable + hidden; }
};

// Materializes the full binary tree (2^(n+1) - 1 nodes) and partitions it:
// visited; infeasible; explorable (feasible child of a visited node); hidden
// (feasible, not yet a child of any visited node). Requires n <= kClassifyMaxN.
NodeCensus classify_nodes(const Graph& g, std::span<const BBNode> visited);

}  // namespace domset

#endif
