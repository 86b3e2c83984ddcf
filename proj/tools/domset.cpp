// domset: generate G(n,p) instances, solve MIN DOMINATING SET exactly,
// evaluate the closed-form complexity bounds, and run experiment sweeps.
//
// Exit codes: 0 success, 1 usage/input error, 2 solver capped.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domset/bounds.hpp"
#include "domset/branch_bound.hpp"
#include "domset/exhaustive.hpp"
#include "domset/graph.hpp"
#include "domset/graph_io.hpp"
#include "domset/harness.hpp"
#include "domset/rng.hpp"

using json = nlohmann::ordered_json;
using namespace domset;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCapped = 2;

void echo_config(const json& config) { std::cerr << config.dump() << '\n'; }

json report_to_json(const SolveReport& report) {
  json out;
  out["algorithm"] = report.algorithm;
  out["n"] = report.n;
  if (report.opt_size)
    out["opt_size"] = *report.opt_size;
  else
    out["opt_size"] = nullptr;
  if (report.opt_set)
    out["opt_set"] = report.opt_set->to_indices();
  else
    out["opt_set"] = nullptr;
  out["expansions"] = report.expansions;
  out["feasibility_checks"] = report.feasibility_checks;
  if (report.dominating_subsets) out["dominating_subsets"] = *report.dominating_subsets;
  out["capped"] = report.capped;
  out["cap_reason"] = report.cap_reason;
  out["tie_rule"] = report.tie_rule;
  if (report.seed)
    out["seed"] = *report.seed;
  else
    out["seed"] = nullptr;
  return out;
}

// Echoes the resolved configuration to stderr, then writes the record.
void emit_bound(const std::string& name, const json& params, double value,
                std::optional<double> per_n_base = std::nullopt) {
  echo_config({{"command", "bounds"}, {"op", name}, {"params", params}});
  json out;
  out["name"] = name;
  out["params"] = params;
  out["value"] = value;
  if (per_n_base)
    out["per_n_base"] = *per_n_base;
  else
    out["per_n_base"] = nullptr;
  std::cout << out.dump() << '\n';
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::invalid_argument("--n-list is empty");
  return out;
}

int run_gen(int n, double p, std::uint64_t seed, const std::string& out_path) {
  echo_config({{"command", "gen"}, {"n", n}, {"p", p}, {"seed", seed}, {"out", out_path}});
  const Graph g = gnp_sample(n, p, seed);
  write_graph_file(out_path, g);
  json record;
  record["n"] = g.order();
  record["m"] = g.edge_count();
  record["out"] = out_path;
  std::cout << record.dump() << '\n';
  return kExitOk;
}

int run_solve(const std::string& in_path, const std::string& algo, const std::string& tie,
              std::optional<std::uint64_t> seed, std::uint64_t cap,
              std::optional<std::uint64_t> frontier_limit) {
  json config{{"command", "solve"}, {"in", in_path},   {"algo", algo},
              {"tie", tie},         {"cap", cap}};
  if (seed) config["seed"] = *seed;
  if (frontier_limit) config["frontier_limit"] = *frontier_limit;
  echo_config(config);

  const Graph g = read_graph_file(in_path);
  SolveReport report;
  if (algo == "bb") {
    BBOptions opts;
    opts.max_expansions = cap;
    if (frontier_limit) opts.frontier_limit = *frontier_limit;
    if (tie == "rand") {
      if (!seed) throw std::invalid_argument("--tie rand requires --seed");
      opts.tie = TieRule::Random;
      opts.seed = *seed;
    } else if (tie != "det") {
      throw std::invalid_argument("--tie must be det or rand");
    }
    report = bb_solve(g, opts);
  } else if (algo == "exhaustive") {
    report = exhaustive_solve(g);
  } else if (algo == "oracle") {
    const auto res = domination_number_oracle(g);
    report.algorithm = "oracle";
    report.n = g.order();
    report.opt_size = res.size;
    report.opt_set = res.witness;
    report.expansions = res.subsets_checked;
  } else {
    throw std::invalid_argument("--algo must be bb, exhaustive, or oracle");
  }

  std::cout << report_to_json(report).dump() << '\n';
  return report.capped ? kExitCapped : kExitOk;
}

int run_experiment(const std::string& regime_name, double param, const std::string& f_name,
                   const std::string& n_list_text, int trials, std::uint64_t seed,
                   const std::string& algo, std::uint64_t cap, unsigned threads,
                   const std::string& out_path) {
  const std::string full_regime =
      regime_name == "f-over-n" ? "f_over_n_" + f_name
      : regime_name == "c-over-n" ? "c_over_n"
      : regime_name == "fixed-p" ? "fixed_p"
                                 : regime_name;
  const harness::Regime regime = harness::Regime::from_name(full_regime, param);
  const std::vector<int> n_list = parse_n_list(n_list_text);

  echo_config({{"command", "experiment"},
               {"regime", regime.name()},
               {"param", param},
               {"n_list", n_list},
               {"trials", trials},
               {"seed", seed},
               {"algo", algo},
               {"cap", cap},
               {"threads", threads},
               {"out", out_path}});

  const auto records = harness::sweep(regime, n_list, trials, seed, algo, cap, threads);
  harness::write_csv_file(out_path, records);

  const auto growth = harness::growth_rate(records);
  for (const auto& pt : growth.per_n) {
    json line;
    line["n"] = pt.n;
    line["records"] = pt.records;
    line["capped"] = pt.capped;
    line["mean_log2_expansions"] = pt.mean_log2_expansions;
    line["rate"] = pt.rate;
    line["valid"] = pt.valid;
    std::cout << line.dump() << '\n';
  }
  json summary;
  if (growth.slope)
    summary["slope"] = *growth.slope;
  else
    summary["slope"] = nullptr;
  summary["capped_total"] = growth.capped_total;
  summary["records"] = records.size();
  summary["out"] = out_path;
  std::cout << summary.dump() << '\n';
  return kExitOk;
}

// Enumerates every labeled graph on up to max_n vertices plus a fixed
// random battery on n in [6,12]; checks solver agreement with the oracle
// and the expansion lower-bound invariant u(x) <= gamma(G).
int run_verify(int max_n) {
  echo_config({{"command", "verify"}, {"max_n", max_n}});
  if (max_n < 1 || max_n > 5) throw std::invalid_argument("--max-n must be in [1,5]");

  std::uint64_t graphs = 0, checks = 0, failures = 0;

  const auto check_graph = [&](const Graph& g) {
    ++graphs;
    const int gamma = domination_number_oracle(g).size;
    const auto note_failure = [&](const char* what, int got) {
      ++failures;
      std::cerr << "verify: " << what << " mismatch (n=" << g.order()
                << ", gamma=" << gamma << ", got=" << got << ")\n";
    };

    const auto ex = exhaustive_solve(g);
    ++checks;
    if (ex.opt_size != gamma) note_failure("exhaustive", *ex.opt_size);

    std::vector<BBNode> trace;
    BBOptions det;
    det.trace = &trace;
    const auto det_report = bb_solve(g, det);
    ++checks;
    if (det_report.opt_size != gamma) note_failure("bb det", *det_report.opt_size);
    for (const BBNode& node : trace) {
      if (node.potential > gamma) {
        ++failures;
        std::cerr << "verify: expansion with potential above gamma (n=" << g.order() << ")\n";
        break;
      }
    }

    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      trace.clear();
      BBOptions rnd;
      rnd.tie = TieRule::Random;
      rnd.seed = seed;
      rnd.trace = &trace;
      const auto report = bb_solve(g, rnd);
      ++checks;
      if (report.opt_size != gamma) note_failure("bb rand", *report.opt_size);
      for (const BBNode& node : trace) {
        if (node.potential > gamma) {
          ++failures;
          std::cerr << "verify: random-tie expansion above gamma (n=" << g.order() << ")\n";
          break;
        }
      }
    }
  };

  for (int n = 1; n <= max_n; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      Graph g(n);
      int idx = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++idx)
          if (mask & (1u << idx)) g.add_edge(u, v);
      check_graph(g);
    }
  }

  const double ps[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  for (int n = 6; n <= 12; ++n)
    for (const double p : ps)
      for (std::uint64_t rep = 0; rep < 3; ++rep)
        check_graph(gnp_sample(n, p, mix64(0x76657269667953ULL ^ (static_cast<std::uint64_t>(n) << 16) ^
                                           (static_cast<std::uint64_t>(p * 100)) ^ (rep << 32))));

  json summary;
  summary["graphs"] = graphs;
  summary["checks"] = checks;
  summary["failures"] = failures;
  summary["pass"] = failures == 0;
  std::cout << summary.dump() << '\n';
  return failures == 0 ? kExitOk : kExitError;
}

void add_bounds_commands(CLI::App& bounds_cmd, int& exit_code) {
  using namespace domset::bounds;

  static std::int64_t n = 0, k = 0;
  static double p = 0, eps = 0, c = 0, j = 0, x = 0;
  static int grid = 10000;
  static std::string variant = "proof";

  auto* logbinom = bounds_cmd.add_subcommand("logbinom", "log C(n,k)");
  logbinom->add_option("--n", n)->required();
  logbinom->add_option("--k", k)->required();
  logbinom->callback([&] { emit_bound("log_binomial", {{"n", n}, {"k", k}}, log_binomial(n, k)); });

  auto* mupper = bounds_cmd.add_subcommand("m-upper", "log of the M bound");
  mupper->add_option("--n", n)->required();
  mupper->add_option("--k", k)->required();
  mupper->add_option("--p", p)->required();
  mupper->callback([&] {
    const double v = m_upper_log(n, k, p);
    emit_bound("m_upper_log", {{"n", n}, {"k", k}, {"p", p}}, v,
               std::exp(v / static_cast<double>(n)));
  });

  auto* entropy = bounds_cmd.add_subcommand("entropy", "binary entropy H(eps)");
  entropy->add_option("--eps", eps)->required();
  entropy->callback([&] { emit_bound("binary_entropy", {{"eps", eps}}, binary_entropy(eps)); });

  auto* feps = bounds_cmd.add_subcommand("feps", "interval-table factor f(eps)");
  feps->add_option("--eps", eps)->required();
  feps->add_option("--c", c)->required();
  feps->callback([&] { emit_bound("f_eps", {{"eps", eps}, {"c", c}}, f_eps(eps, c)); });

  auto* table = bounds_cmd.add_subcommand("feps-table", "per-interval grid check of f(eps)");
  table->add_option("--c", c)->required();
  table->callback([&] {
    echo_config({{"command", "bounds"}, {"op", "feps_table"}, {"params", {{"c", c}}}});
    bool all_pass = true;
    for (const auto& row : verify_interval_table(c)) {
      json line;
      line["lo"] = row.lo;
      line["hi"] = row.hi;
      line["grid_max"] = row.grid_max;
      line["stated_bound"] = row.stated_bound;
      line["pass"] = row.pass;
      std::cout << line.dump() << '\n';
      all_pass = all_pass && row.pass;
    }
    if (!all_pass) exit_code = kExitError;
  });

  auto* t2eps = bounds_cmd.add_subcommand("theorem2-eps", "eps(c) for the lower bound");
  t2eps->add_option("--c", c)->required();
  t2eps->callback([&] { emit_bound("theorem2_eps", {{"c", c}}, theorem2_eps(c)); });

  auto* t2prob = bounds_cmd.add_subcommand("theorem2-prob", "per-n base of Pr[gamma <= n-eps n]");
  t2prob->add_option("--c", c)->required();
  t2prob->add_option("--eps", eps, "defaults to theorem2-eps(c)");
  t2prob->callback([&] {
    const double e = t2prob->count("--eps") ? eps : theorem2_eps(c);
    const auto b = theorem2_prob_bound(c, e);
    emit_bound("theorem2_prob_bound", {{"c", c}, {"eps", e}, {"inner", b.inner}}, b.base, b.base);
  });

  auto* t2lower = bounds_cmd.add_subcommand("theorem2-lower", "per-n base (1/eps)^eps");
  t2lower->add_option("--eps", eps)->required();
  t2lower->callback([&] {
    const double v = theorem2_lower_base(eps);
    emit_bound("theorem2_lower_base", {{"eps", eps}}, v, v);
  });

  auto* eds = bounds_cmd.add_subcommand("expected-ds", "E[#dominating sets] in G(n,p)");
  eds->add_option("--n", n)->required();
  eds->add_option("--p", p)->required();
  eds->callback([&] {
    const double log_v = expected_dominating_sets_log(static_cast<int>(n), p);
    emit_bound("expected_dominating_sets", {{"n", n}, {"p", p}, {"log_value", log_v}},
               std::exp(log_v), n > 0 ? std::exp(log_v / static_cast<double>(n)) : 1.0);
  });

  auto* lw = bounds_cmd.add_subcommand("lambertw", "principal-branch W(x)");
  lw->add_option("--x", x)->required();
  lw->callback([&] { emit_bound("lambert_w", {{"x", x}}, lambert_w(x)); });

  auto* gp = bounds_cmd.add_subcommand("gplus", "upper growth base g+(j)");
  gp->add_option("--j", j)->required();
  gp->callback([&] {
    const double v = g_plus(j);
    emit_bound("g_plus", {{"j", j}}, v, v);
  });

  auto* gm = bounds_cmd.add_subcommand("gminus", "lower growth base g-(j)");
  gm->add_option("--j", j)->required();
  gm->callback([&] {
    const double v = g_minus(j);
    emit_bound("g_minus", {{"j", j}}, v, v);
  });

  auto* tnp = bounds_cmd.add_subcommand("tnp-grid", "stationary point of the per-n factor");
  tnp->add_option("--n", n)->required();
  tnp->add_option("--j", j)->required();
  tnp->add_option("--grid", grid);
  tnp->callback([&] {
    const auto res = tnp_upper_grid(n, j, grid);
    emit_bound("tnp_upper_grid",
               {{"n", n},
                {"j", j},
                {"argmax", res.argmax},
                {"raw_grid_max", res.raw_grid_max},
                {"raw_grid_argmax", res.raw_grid_argmax},
                {"log_total", res.log_total}},
               res.base, res.base);
  });

  auto* exh = bounds_cmd.add_subcommand("exhaustive-upper", "per-n base at p = c/n");
  exh->add_option("--c", c)->required();
  exh->add_option("--variant", variant, "statement or proof")
      ->check(CLI::IsMember({"statement", "proof"}));
  exh->callback([&] {
    const auto v = exhaustive_upper_c(c, variant == "statement"
                                             ? ExhaustiveBoundVariant::Statement
                                             : ExhaustiveBoundVariant::Proof);
    emit_bound("exhaustive_upper_c", {{"c", c}, {"variant", variant}}, v, v);
  });

  bounds_cmd.require_subcommand(1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact MIN DOMINATING SET solvers and average-case bound evaluation"};
  app.require_subcommand(1);

  int exit_code = kExitOk;

  // gen
  int gen_n = 0;
  double gen_p = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "sample a G(n,p) graph to a file");
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--p", gen_p, "edge probability")->required();
  gen->add_option("--seed", gen_seed, "rng seed")->required();
  gen->add_option("--out", gen_out, "output path")->required();
  gen->callback([&] { exit_code = run_gen(gen_n, gen_p, gen_seed, gen_out); });

  // solve
  std::string solve_in, solve_algo = "bb", solve_tie = "det";
  std::uint64_t solve_seed_val = 0, solve_frontier_val = 0;
  std::uint64_t solve_cap = 10'000'000;
  auto* solve = app.add_subcommand("solve", "solve one instance exactly");
  solve->add_option("--in", solve_in, "graph file")->required();
  solve->add_option("--algo", solve_algo, "bb, exhaustive, or oracle")
      ->check(CLI::IsMember({"bb", "exhaustive", "oracle"}));
  solve->add_option("--tie", solve_tie, "det or rand")->check(CLI::IsMember({"det", "rand"}));
  auto* solve_seed_opt = solve->add_option("--seed", solve_seed_val, "seed for the rand tie rule");
  solve->add_option("--cap", solve_cap, "expansion cap");
  auto* solve_frontier_opt =
      solve->add_option("--frontier-limit", solve_frontier_val, "frontier size limit");
  solve->callback([&] {
    std::optional<std::uint64_t> seed;
    if (solve_seed_opt->count()) seed = solve_seed_val;
    std::optional<std::uint64_t> frontier;
    if (solve_frontier_opt->count()) frontier = solve_frontier_val;
    exit_code = run_solve(solve_in, solve_algo, solve_tie, seed, solve_cap, frontier);
  });

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a closed-form bound");
  add_bounds_commands(*bounds_cmd, exit_code);

  // experiment
  std::string exp_regime, exp_f = "log", exp_nlist, exp_algo = "bb", exp_out;
  double exp_param = 0;
  int exp_trials = 1;
  std::uint64_t exp_seed = 0, exp_cap = 10'000'000;
  unsigned exp_threads = 1;
  auto* experiment = app.add_subcommand("experiment", "seeded sweep over an (n, regime) grid");
  experiment->add_option("--regime", exp_regime, "fixed-p, c-over-n, or f-over-n")
      ->required()
      ->check(CLI::IsMember({"fixed-p", "c-over-n", "f-over-n"}));
  experiment->add_option("--param", exp_param, "p for fixed-p, c for c-over-n");
  experiment->add_option("--f", exp_f, "log or sqrt (f-over-n)")
      ->check(CLI::IsMember({"log", "sqrt"}));
  experiment->add_option("--n-list", exp_nlist, "comma-separated n values")->required();
  experiment->add_option("--trials", exp_trials, "trials per n")->required();
  experiment->add_option("--seed", exp_seed, "master seed")->required();
  experiment->add_option("--algo", exp_algo, "bb, bb_rand, or exhaustive")
      ->check(CLI::IsMember({"bb", "bb_rand", "exhaustive"}));
  experiment->add_option("--cap", exp_cap, "expansion cap per trial");
  experiment->add_option("--threads", exp_threads, "worker threads");
  experiment->add_option("--out", exp_out, "output CSV path")->required();
  experiment->callback([&] {
    exit_code = run_experiment(exp_regime, exp_param, exp_f, exp_nlist, exp_trials, exp_seed,
                               exp_algo, exp_cap, exp_threads, exp_out);
  });

  // verify
  int verify_max_n = 5;
  auto* verify = app.add_subcommand("verify", "solver cross-checks on an exhaustive battery");
  verify->add_option("--max-n", verify_max_n, "enumerate all graphs up to this order (<= 5)");
  verify->callback([&] { exit_code = run_verify(verify_max_n); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return exit_code;
}
