#include "domset/exhaustive.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "mask_util.hpp"

namespace domset {

namespace {

// Lexicographic order on the coordinate sequence x_1..x_n: the vector with
// a 0 at the first differing coordinate is the smaller one.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) == 0;
}

void check_guard(const Graph& g, const char* who, int min_n) {
  if (g.order() < min_n)
    throw std::invalid_argument(std::string(who) + ": need n >= " + std::to_string(min_n));
  if (g.order() > kExhaustiveMaxN)
    throw std::invalid_argument(std::string(who) + ": n exceeds guard limit " +
                                std::to_string(kExhaustiveMaxN));
}

}  // namespace

SolveReport exhaustive_solve(const Graph& g) {
  check_guard(g, "exhaustive_solve", 1);
  const int n = g.order();
  const auto masks = detail::closed_masks(g);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  std::uint64_t dominating = 0;
  std::uint64_t best = ~std::uint64_t{0};
  int best_size = n + 1;
  for (std::uint64_t s = 0; s <= full; ++s) {
    if (!detail::mask_dominates(masks, s, full)) continue;
    ++dominating;
    const int size = std::popcount(s);
    if (size < best_size || (size == best_size && lex_less(s, best))) {
      best = s;
      best_size = size;
    }
  }

  SolveReport report;
  report.algorithm = "exhaustive";
  report.n = n;
  report.expansions = std::uint64_t{1} << n;
  report.dominating_subsets = dominating;
  report.opt_size = best_size;
  report.opt_set = detail::mask_to_set(best, n);
  return report;
}

std::uint64_t count_dominating_sets(const Graph& g) {
  check_guard(g, "count_dominating_sets", 0);
  const int n = g.order();
  const auto masks = detail::closed_masks(g);
  const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;

  std::uint64_t count = 0;
  std::uint64_t s = 0;
  do {
    if (detail::mask_dominates(masks, s, full)) ++count;
  } while (s++ != full);
  return count;
}

}  // namespace domset
