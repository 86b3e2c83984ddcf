#include "domset/branch_bound.hpp"

#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "domset/rng.hpp"
#include "mask_util.hpp"

namespace domset {

int potential(const BBNode& node, int n) {
  if (node.depth < 0 || node.depth > n) throw std::invalid_argument("potential: bad depth");
  const int ones = node.prefix.count() + (n - node.depth);
  return ones - n + node.depth;
}

VertexSet node_set(const BBNode& node, int n) {
  if (node.depth < 0 || node.depth > n) throw std::invalid_argument("node_set: bad depth");
  VertexSet s(n);
  node.prefix.for_each_set([&](int i) { s.set(i); });
  for (int v = node.depth; v < n; ++v) s.set(v);
  return s;
}

std::pair<BBNode, BBNode> children(const BBNode& node, int n) {
  if (node.depth >= n) throw std::invalid_argument("children: node is a full-depth leaf");
  Bitset base(n);
  node.prefix.for_each_set([&](int i) { base.set(i); });
  BBNode left{base, node.depth + 1, node.potential + 1};
  left.prefix.set(node.depth);
  BBNode right{std::move(base), node.depth + 1, node.potential};
  return {std::move(left), std::move(right)};
}

const char* to_string(TieRule tie) {
  return tie == TieRule::Deterministic ? "det" : "rand";
}

namespace {

struct FrontierNode {
  Bitset prefix;
  std::vector<std::uint32_t> cover;  // per-vertex dominator count in the implied set
  int depth = 0;
  int potential = 0;
  bool last_one = false;     // value of the last decided coordinate
  std::uint64_t key = 0;     // random tie key (Random rule only)
  std::uint64_t seq = 0;     // insertion sequence, completes the order
};

struct FrontierCompare {
  TieRule tie;
  // priority_queue pops the "largest"; return true when a pops after b.
  bool operator()(const FrontierNode& a, const FrontierNode& b) const {
    if (a.potential != b.potential) return a.potential > b.potential;
    if (tie == TieRule::Random) {
      if (a.key != b.key) return a.key > b.key;
      return a.seq > b.seq;
    }
    if (a.depth != b.depth) return a.depth < b.depth;        // deeper first
    if (a.last_one != b.last_one) return a.last_one;         // right child first
    return a.seq > b.seq;
  }
};

}  // namespace

SolveReport bb_solve(const Graph& g, const BBOptions& opts) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("bb_solve: need n >= 1");
  if (opts.max_expansions < 1) throw std::invalid_argument("bb_solve: cap must be >= 1");

  std::vector<Bitset> closed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) closed[static_cast<std::size_t>(v)] = g.closed_neighborhood(v);

  SplitMix64 tie_rng(opts.seed);
  const bool random_tie = opts.tie == TieRule::Random;

  SolveReport report;
  report.algorithm = "bb";
  report.n = n;
  report.tie_rule = to_string(opts.tie);
  if (random_tie) report.seed = opts.seed;

  std::priority_queue<FrontierNode, std::vector<FrontierNode>, FrontierCompare> frontier{
      FrontierCompare{opts.tie}};

  std::uint64_t seq = 0;
  FrontierNode root;
  root.prefix = Bitset(n);
  root.cover.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    root.cover[static_cast<std::size_t>(v)] =
        static_cast<std::uint32_t>(closed[static_cast<std::size_t>(v)].count());
  if (random_tie) root.key = tie_rng.next();
  frontier.push(std::move(root));

  while (!frontier.empty()) {
    FrontierNode cur = frontier.top();
    frontier.pop();
    ++report.expansions;
    if (opts.trace) opts.trace->push_back(BBNode{cur.prefix, cur.depth, cur.potential});

    if (cur.depth == n) {
      report.opt_set = cur.prefix;
      report.opt_size = cur.potential;
      return report;
    }
    if (report.expansions >= opts.max_expansions) {
      report.capped = true;
      report.cap_reason = "expansion_cap";
      return report;
    }

    const int d = cur.depth;

    FrontierNode left;
    left.prefix = cur.prefix;
    left.prefix.set(d);
    left.cover = cur.cover;
    left.depth = d + 1;
    left.potential = cur.potential + 1;
    left.last_one = true;
    left.seq = ++seq;
    if (random_tie) left.key = tie_rng.next();
    frontier.push(std::move(left));

    // Right child: vertex d leaves the implied set. Decrement the dominator
    // count over N[d]; a zero count means some vertex lost its only dominator.
    ++report.feasibility_checks;
    bool feasible = true;
    closed[static_cast<std::size_t>(d)].for_each_set([&](int u) {
      if (--cur.cover[static_cast<std::size_t>(u)] == 0) feasible = false;
    });
    if (feasible) {
      FrontierNode right;
      right.prefix = std::move(cur.prefix);
      right.cover = std::move(cur.cover);
      right.depth = d + 1;
      right.potential = cur.potential;
      right.last_one = false;
      right.seq = ++seq;
      if (random_tie) right.key = tie_rng.next();
      frontier.push(std::move(right));
    }

    if (frontier.size() > opts.frontier_limit) {
      report.capped = true;
      report.cap_reason = "frontier_overflow";
      return report;
    }
  }

  // Unreachable for n >= 1: the left child is always feasible, so the
  // all-ones path keeps the frontier nonempty until a depth-n pop.
  report.capped = true;
  report.cap_reason = "frontier_exhausted";
  return report;
}

NodeCensus classify_nodes(const Graph& g, std::span<const BBNode> visited) {
  const int n = g.order();
  if (n > kClassifyMaxN)
    throw std::invalid_argument("classify_nodes: n exceeds guard limit " +
                                std::to_string(kClassifyMaxN));

  const auto masks = detail::closed_masks(g);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  const auto node_key = [](int depth, std::uint64_t prefix_bits) {
    return (static_cast<std::uint64_t>(depth) << 32) | prefix_bits;
  };
  std::unordered_set<std::uint64_t> visited_keys;
  for (const BBNode& node : visited)
    visited_keys.insert(node_key(node.depth, node.prefix.word(0)));

  NodeCensus census;
  for (int depth = 0; depth <= n; ++depth) {
    const std::uint64_t undecided = full & ~((std::uint64_t{1} << depth) - 1);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << depth); ++bits) {
      const std::uint64_t implied = bits | undecided;
      if (visited_keys.contains(node_key(depth, bits))) {
        ++census.visited;
      } else if (!detail::mask_dominates(masks, implied, full)) {
        ++census.infeasible;
      } else if (depth > 0 && visited_keys.contains(node_key(
                                  depth - 1, bits & ~(std::uint64_t{1} << (depth - 1))))) {
        ++census.explorable;
      } else {
        ++census.hidden;
      }
    }
  }
  return census;
}

}  // namespace domset
