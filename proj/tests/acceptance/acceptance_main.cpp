// Acceptance battery: one line per criterion, nonzero exit on any failure.
// Statistical checks use frozen master seeds, making every quantity here a
// deterministic regression value rather than a hypothesis test.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "domset/bounds.hpp"
#include "domset/branch_bound.hpp"
#include "domset/exhaustive.hpp"
#include "domset/graph.hpp"
#include "domset/harness.hpp"
#include "domset/rng.hpp"

using namespace domset;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kBatterySeed = 0x6261747465727931ULL;
constexpr std::uint64_t kMonteCarloSeed = 0x6d635f65735f3031ULL;
constexpr std::uint64_t kRegressionSeed = 987654321ULL;

// Frozen per-n rate floors for the exponential-regime regression (observed
// 0.6253 / 0.5770 / 0.5912 at the seed above, minus slack for platform FP
// variation).
struct RateFloor {
  int n;
  double floor;
};
constexpr RateFloor kExponentialFloors[] = {{12, 0.62}, {16, 0.57}, {20, 0.58}};

int failures = 0;

void report(int id, bool pass, const std::string& name, const std::string& detail) {
  std::printf("[%2d] %s  %s (%s)\n", id, pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

Graph graph_from_mask(int n, std::uint32_t mask) {
  Graph g(n);
  int idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++idx)
      if (mask & (1u << idx)) g.add_edge(u, v);
  return g;
}

struct BatteryOutcome {
  std::uint64_t graphs = 0;
  std::uint64_t solver_checks = 0;
  std::uint64_t optimum_mismatches = 0;
  std::uint64_t pruning_violations = 0;
};

void run_solvers(const Graph& g, BatteryOutcome& out) {
  const int gamma = domination_number_oracle(g).size;
  ++out.graphs;

  const auto check_bb = [&](const BBOptions& base_opts) {
    std::vector<BBNode> trace;
    BBOptions opts = base_opts;
    opts.trace = &trace;
    const auto report = bb_solve(g, opts);
    ++out.solver_checks;
    if (report.capped || report.opt_size != gamma) ++out.optimum_mismatches;
    for (const BBNode& node : trace)
      if (node.potential > gamma) {
        ++out.pruning_violations;
        break;
      }
  };

  check_bb(BBOptions{});
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    BBOptions opts;
    opts.tie = TieRule::Random;
    opts.seed = seed;
    check_bb(opts);
  }

  const auto ex = exhaustive_solve(g);
  ++out.solver_checks;
  if (ex.opt_size != gamma) ++out.optimum_mismatches;
}

BatteryOutcome run_battery() {
  BatteryOutcome out;
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask)
      run_solvers(graph_from_mask(n, mask), out);
  }
  const double ps[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  for (int i = 0; i < 300; ++i) {
    const int n = 6 + (i % 7);
    const double p = ps[(i / 7) % 5];
    run_solvers(gnp_sample(n, p, mix64(kBatterySeed ^ static_cast<std::uint64_t>(i))), out);
  }
  return out;
}

void criterion_1_and_2() {
  const auto out = run_battery();
  {
    std::ostringstream detail;
    detail << out.graphs << " graphs, " << out.solver_checks << " solver runs, "
           << out.optimum_mismatches << " mismatches";
    report(1, out.optimum_mismatches == 0 && out.graphs == 1399,
           "oracle equivalence over the exhaustive + random battery", detail.str());
  }
  {
    std::ostringstream detail;
    detail << out.pruning_violations << " expansions above gamma";
    report(2, out.pruning_violations == 0, "pruning invariant u(x) <= gamma(G)", detail.str());
  }
}

void criterion_3() {
  SplitMix64 rng(0x706f74656e7469ULL);
  std::uint64_t checked = 0, violations = 0;
  for (int iter = 0; iter < 100000; ++iter) {
    const int n = 1 + static_cast<int>(rng.next() % 64);
    const int depth = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
    BBNode node;
    node.prefix = Bitset(n);
    for (int i = 0; i < depth; ++i)
      if (rng.next() & 1) node.prefix.set(i);
    node.depth = depth;
    node.potential = node.prefix.count();

    // identity: the definitional score |x| - n + delta equals popcount
    if (potential(node, n) != node.potential) ++violations;

    const auto [left, right] = children(node, n);
    if (potential(left, n) != left.potential || potential(right, n) != right.potential)
      ++violations;
    if (left.potential < node.potential || right.potential < node.potential) ++violations;
    ++checked;
  }
  std::ostringstream detail;
  detail << checked << " parent/child pairs, " << violations << " violations";
  report(3, violations == 0 && checked == 100000, "potential identity and monotonicity",
         detail.str());
}

void criterion_4() {
  bool pass = true;
  std::ostringstream detail;

  // Exact route: average count_dominating_sets over every labeled graph,
  // weighted by the edge-probability measure.
  double worst_exact = 0;
  for (int n = 0; n <= 4; ++n) {
    for (double p : {0.2, 0.5, 0.8}) {
      const int pairs = n * (n - 1) / 2;
      double avg = 0;
      for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        const Graph g = graph_from_mask(n, mask);
        const int edges = static_cast<int>(g.edge_count());
        avg += std::pow(p, edges) * std::pow(1.0 - p, pairs - edges) *
               static_cast<double>(count_dominating_sets(g));
      }
      worst_exact = std::max(worst_exact,
                             std::abs(avg - bounds::expected_dominating_sets(n, p)));
    }
  }
  pass = pass && worst_exact <= 1e-9;
  detail << "exact worst error " << worst_exact;

  // Monte Carlo route at n in {6, 8}.
  double worst_sigma = 0;
  for (int n : {6, 8}) {
    for (double p : {0.2, 0.5, 0.8}) {
      const auto mc = harness::monte_carlo_expected_ds(n, p, 10000, kMonteCarloSeed);
      const double closed = bounds::expected_dominating_sets(n, p);
      const double sigmas = std::abs(mc.mean - closed) / mc.stderr_mean;
      worst_sigma = std::max(worst_sigma, sigmas);
    }
  }
  pass = pass && worst_sigma <= 4.0;
  detail << ", MC worst deviation " << worst_sigma << " stderr";
  report(4, pass, "expected dominating sets: closed form vs exact and Monte Carlo",
         detail.str());
}

void criterion_5() {
  const auto rows = bounds::verify_interval_table(20.0);
  bool pass = rows.size() == 9;
  double worst_margin = 1e9;
  for (const auto& row : rows) {
    pass = pass && row.pass;
    worst_margin = std::min(worst_margin, row.stated_bound - row.grid_max);
  }
  std::ostringstream detail;
  detail << rows.size() << " rows, smallest margin " << worst_margin;
  report(5, pass, "interval table for f(eps) at c = 20", detail.str());
}

void criterion_6() {
  bool pass = true;
  std::ostringstream detail;

  double worst_resid = 0;
  for (double x = 1e-9; x <= 1.0000001e9; x *= 10.0) {
    const double w = bounds::lambert_w(x);
    worst_resid =
        std::max(worst_resid, std::abs(w * std::exp(w) - x) / std::max(1.0, std::abs(x)));
  }
  pass = pass && worst_resid <= 1e-12;
  pass = pass && std::abs(bounds::lambert_w(std::exp(1.0)) - 1.0) <= 1e-12;
  pass = pass && std::abs(bounds::g_plus(1e6) - std::exp(1.0)) <= 1e-3;
  pass = pass && std::abs(bounds::g_plus(1e-9) - 1.0) <= 1e-6;
  pass = pass && std::abs(bounds::g_minus(1e6) - std::exp(std::exp(-1.0))) <= 1e-2;
  detail << "worst scaled residual " << worst_resid;
  report(6, pass, "Lambert-W suite and growth-base limits", detail.str());
}

void criterion_7() {
  bool pass = true;
  double worst = 0;
  for (double j : {0.5, 1.0, 2.0, 5.0, 20.0}) {
    const auto res = bounds::tnp_upper_grid(1000, j);
    const double closed_base = std::exp(1.0 - bounds::lambert_w(j) / j);
    const double closed_arg = 1.0 - bounds::lambert_w(j) / j;
    worst = std::max({worst, std::abs(res.base - closed_base),
                      std::abs(res.argmax - closed_arg)});
  }
  pass = worst <= 1e-3;
  std::ostringstream detail;
  detail << "worst deviation from the closed form " << worst;
  report(7, pass, "stationarity cross-check of the per-n factor", detail.str());
}

void criterion_8() {
  bool pass = std::pow(1.0 - std::exp(-0.2), 0.99) < 0.5;
  double worst_inner = 0;
  for (double c = 0.1; c <= 100.0; c += 0.1) {
    const auto b = bounds::theorem2_prob_bound(c, bounds::theorem2_eps(c));
    worst_inner = std::max(worst_inner, b.inner);
  }
  pass = pass && worst_inner < 0.5;
  std::ostringstream detail;
  detail << "largest inner factor " << worst_inner;
  report(8, pass, "lower-bound lemma: inner factor below 1/2", detail.str());
}

void criterion_9() {
  bool pass = true;
  std::ostringstream detail;

  const harness::Regime fixed{harness::RegimeKind::FixedP, 0.5, harness::GrowthFunction::Log};
  const std::vector<int> fixed_ns{20, 30, 40};
  const auto fixed_records =
      harness::sweep(fixed, fixed_ns, 30, kRegressionSeed, "bb", 10'000'000);
  const auto fixed_growth = harness::growth_rate(fixed_records);
  for (const auto& pt : fixed_growth.per_n)
    pass = pass && pt.valid && pt.capped < pt.records / 5.0;
  for (std::size_t i = 1; i < fixed_growth.per_n.size(); ++i)
    pass = pass && fixed_growth.per_n[i].rate < fixed_growth.per_n[i - 1].rate;
  detail << "fixed p=0.5 rates";
  for (const auto& pt : fixed_growth.per_n) detail << ' ' << pt.rate;

  const harness::Regime cn{harness::RegimeKind::COverN, 2.0, harness::GrowthFunction::Log};
  const std::vector<int> cn_ns{12, 16, 20};
  const auto cn_records = harness::sweep(cn, cn_ns, 30, kRegressionSeed, "bb", 10'000'000);
  const auto cn_growth = harness::growth_rate(cn_records);
  pass = pass && cn_growth.slope.has_value() && *cn_growth.slope >= 0.05;
  for (const auto& pt : cn_growth.per_n) {
    pass = pass && pt.valid && pt.capped < pt.records / 5.0;
    for (const auto& fl : kExponentialFloors)
      if (fl.n == pt.n) pass = pass && pt.rate >= fl.floor;
  }
  detail << "; p=2/n slope " << (cn_growth.slope ? *cn_growth.slope : 0.0) << ", rates";
  for (const auto& pt : cn_growth.per_n) detail << ' ' << pt.rate;

  report(9, pass, "phase-transition regression with frozen seeds", detail.str());
}

// Criterion 10 drives the installed CLI end to end.
struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run_cli(const std::string& cli, const std::string& args, const fs::path& stdout_path) {
  const std::string cmd = cli + " " + args + " > " + stdout_path.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  CliRun res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(stdout_path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  res.out = ss.str();
  return res;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_10() {
  const char* cli_env = std::getenv("DOMSET_CLI");
  if (cli_env == nullptr) {
    report(10, false, "CLI determinism", "DOMSET_CLI not set");
    return;
  }
  const std::string cli = cli_env;
  const fs::path dir = fs::temp_directory_path();
  const auto tmp = [&](const char* name) { return dir / (std::string("domset_acc_") + name); };

  bool pass = true;
  std::ostringstream detail;

  const auto g1 = tmp("g1.graph"), g2 = tmp("g2.graph"), out = tmp("stdout.txt");
  pass = pass && run_cli(cli, "gen --n 30 --p 0.4 --seed 5 --out " + g1.string(), out).exit_code == 0;
  pass = pass && run_cli(cli, "gen --n 30 --p 0.4 --seed 5 --out " + g2.string(), out).exit_code == 0;
  const bool gen_same = slurp(g1) == slurp(g2) && !slurp(g1).empty();
  pass = pass && gen_same;
  detail << "gen identical: " << (gen_same ? "yes" : "no");

  const auto s1 = run_cli(cli, "solve --in " + g1.string() + " --tie det", tmp("s1.txt"));
  const auto s2 = run_cli(cli, "solve --in " + g1.string() + " --tie det", tmp("s2.txt"));
  const bool solve_same = s1.exit_code == 0 && s2.exit_code == 0 && s1.out == s2.out;
  pass = pass && solve_same;
  detail << ", solve identical: " << (solve_same ? "yes" : "no");

  const auto c1 = tmp("e1.csv"), c2 = tmp("e2.csv"), c3 = tmp("e3.csv");
  const std::string exp_args =
      "experiment --regime c-over-n --param 2 --n-list 14,12 --trials 6 --seed 77 --algo bb "
      "--cap 1000000 --out ";
  const auto e1 = run_cli(cli, exp_args + c1.string(), tmp("e1.txt"));
  const auto e2 = run_cli(cli, exp_args + c2.string(), tmp("e2.txt"));
  const auto e3 = run_cli(cli, exp_args + c3.string() + " --threads 4", tmp("e3.txt"));
  const std::string csv1 = slurp(c1);
  // stdout must also repeat byte for byte when the whole flag set repeats
  const auto e1_again = run_cli(cli, exp_args + c1.string(), tmp("e1b.txt"));
  const bool exp_same = e1.exit_code == 0 && e2.exit_code == 0 && e3.exit_code == 0 &&
                        csv1 == slurp(c2) && csv1 == slurp(c3) && csv1 == slurp(c1) &&
                        e1_again.out == e1.out && !csv1.empty();
  pass = pass && exp_same;
  detail << ", experiment identical across reruns and thread shuffles: "
         << (exp_same ? "yes" : "no");

  report(10, pass, "CLI determinism", detail.str());
}

}  // namespace

int main() {
  criterion_1_and_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();

  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
