#ifndef DOMSET_EXHAUSTIVE_HPP
#define DOMSET_EXHAUSTIVE_HPP

#include <cstdint>

#include "domset/graph.hpp"
#include "domset/report.hpp"

namespace domset {

inline constexpr int kExhaustiveMaxN = 25;

// Examines all 2^n subsets of V in increasing binary-counter order and
// returns a minimum-cardinality dominating set (ties broken by the
// lexicographically smallest bit-vector x_1..x_n). The report carries
// expansions = 2^n and the number of dominating subsets encountered.
// Requires 1 <= n <= kExhaustiveMaxN.
SolveReport exhaustive_solve(const Graph& g);

// Exact number of dominating subsets of V. Requires n <= kExhaustiveMaxN.
std::uint64_t count_dominating_sets(const Graph& g);

}  // namespace domset

#endif
