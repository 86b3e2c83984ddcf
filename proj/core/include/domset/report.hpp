#ifndef DOMSET_REPORT_HPP
#define DOMSET_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "domset/graph.hpp"

namespace domset {

// Outcome of one solver run. When capped is false the optimum fields are
// present and opt_size == opt_set->count().
struct SolveReport {
  std::string algorithm;
  int n = 0;
  std::optional<int> opt_size;
  std::optional<VertexSet> opt_set;
  std::uint64_t expansions = 0;
  // Secondary metric: incremental feasibility checks performed on right
  // children (left children inherit feasibility from the parent).
  std::uint64_t feasibility_checks = 0;
  // Exhaustive search only: number of dominating subsets encountered.
  std::optional<std::uint64_t> dominating_subsets;
  bool capped = false;
  std::string cap_reason;  // "expansion_cap", "frontier_overflow", or empty
  std::string tie_rule;    // branch-and-bound only: "det" or "rand"
  std::optional<std::uint64_t> seed;
};

}  // namespace domset

#endif
