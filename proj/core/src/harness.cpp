#include "domset/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <mutex>
#include <thread>

#include "domset/branch_bound.hpp"
#include "domset/exhaustive.hpp"
#include "domset/rng.hpp"

namespace domset {
namespace harness {

namespace {

constexpr std::uint64_t kTrialStreamTag = 0x747269616c5345ULL;
constexpr std::uint64_t kTieStreamTag = 0x7469655f72756c65ULL;

std::uint64_t regime_tag(const Regime& regime) {
  switch (regime.kind) {
    case RegimeKind::FixedP:
      return 1;
    case RegimeKind::COverN:
      return 2;
    case RegimeKind::FOverN:
      return regime.f == GrowthFunction::Log ? 3 : 4;
  }
  return 0;
}

[[noreturn]] void fail_line(int line, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string Regime::name() const {
  switch (kind) {
    case RegimeKind::FixedP:
      return "fixed_p";
    case RegimeKind::COverN:
      return "c_over_n";
    case RegimeKind::FOverN:
      return f == GrowthFunction::Log ? "f_over_n_log" : "f_over_n_sqrt";
  }
  return "unknown";
}

Regime Regime::from_name(const std::string& name, double param) {
  if (name == "fixed_p") return {RegimeKind::FixedP, param, GrowthFunction::Log};
  if (name == "c_over_n") return {RegimeKind::COverN, param, GrowthFunction::Log};
  if (name == "f_over_n_log") return {RegimeKind::FOverN, param, GrowthFunction::Log};
  if (name == "f_over_n_sqrt") return {RegimeKind::FOverN, param, GrowthFunction::Sqrt};
  throw std::invalid_argument("unknown regime: " + name);
}

double resolve_p(const Regime& regime, int n) {
  if (n < 1) throw std::invalid_argument("resolve_p: n >= 1");
  double p = 0;
  switch (regime.kind) {
    case RegimeKind::FixedP:
      p = regime.param;
      if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument("fixed_p regime: p must be in (0,1]");
      return p;
    case RegimeKind::COverN:
      if (!(regime.param > 0.0)) throw std::invalid_argument("c_over_n regime: c must be > 0");
      p = regime.param / n;
      break;
    case RegimeKind::FOverN:
      p = (regime.f == GrowthFunction::Log ? std::log(static_cast<double>(n))
                                           : std::sqrt(static_cast<double>(n))) /
          n;
      break;
  }
  p = std::min(p, 1.0);
  if (!(p > 0.0))
    throw std::invalid_argument("regime resolves to p <= 0 at n = " + std::to_string(n));
  return p;
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, const Regime& regime, int n,
                                int trial) {
  std::uint64_t h = mix64(master_seed ^ kTrialStreamTag);
  h = mix64(h ^ regime_tag(regime));
  h = mix64(h ^ std::bit_cast<std::uint64_t>(regime.param));
  h = mix64(h ^ static_cast<std::uint64_t>(n));
  h = mix64(h ^ static_cast<std::uint64_t>(trial));
  return h;
}

ExperimentRecord run_trial(const Regime& regime, int n, int trial, std::uint64_t master_seed,
                           const std::string& algo, std::uint64_t cap) {
  if (n < 1) throw std::invalid_argument("run_trial: n >= 1");
  const double p = resolve_p(regime, n);
  const std::uint64_t seed = derive_trial_seed(master_seed, regime, n, trial);
  const Graph g = gnp_sample(n, p, seed);

  SolveReport report;
  if (algo == "bb" || algo == "bb_rand") {
    BBOptions opts;
    opts.max_expansions = cap;
    if (algo == "bb_rand") {
      opts.tie = TieRule::Random;
      opts.seed = mix64(seed ^ kTieStreamTag);
    }
    report = bb_solve(g, opts);
  } else if (algo == "exhaustive") {
    report = exhaustive_solve(g);
  } else {
    throw std::invalid_argument("run_trial: unknown algorithm " + algo);
  }

  ExperimentRecord rec;
  rec.regime = regime.name();
  rec.param = regime.kind == RegimeKind::FOverN ? 0.0 : regime.param;
  rec.n = n;
  rec.p = p;
  rec.trial = trial;
  rec.seed = seed;
  rec.algorithm = algo;
  rec.expansions = report.expansions;
  rec.capped = report.capped;
  if (!report.capped) rec.opt_size = report.opt_size;
  return rec;
}

std::vector<ExperimentRecord> sweep(const Regime& regime, std::span<const int> n_list,
                                    int trials, std::uint64_t master_seed,
                                    const std::string& algo, std::uint64_t cap,
                                    unsigned threads) {
  if (n_list.empty()) throw std::invalid_argument("sweep: empty n list");
  if (trials < 1) throw std::invalid_argument("sweep: trials >= 1");

  struct Job {
    int n;
    int trial;
  };
  std::vector<Job> jobs;
  jobs.reserve(n_list.size() * static_cast<std::size_t>(trials));
  for (int n : n_list)
    for (int t = 0; t < trials; ++t) jobs.push_back({n, t});

  std::vector<ExperimentRecord> records(jobs.size());
  const auto run_job = [&](std::size_t idx) {
    records[idx] = run_trial(regime, jobs[idx].n, jobs[idx].trial, master_seed, algo, cap);
  };

  if (threads <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_job(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    const unsigned count = std::min<std::size_t>(threads, jobs.size());
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t idx = next.fetch_add(1);
          if (idx >= jobs.size() || failed.load()) return;
          try {
            run_job(idx);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            failed.store(true);
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return a.n != b.n ? a.n < b.n : a.trial < b.trial;
  });
  return records;
}

GrowthReport growth_rate(std::span<const ExperimentRecord> records) {
  struct Acc {
    int n = 0;
    int count = 0;
    int capped = 0;
    double sum_log2 = 0;
  };
  std::vector<Acc> groups;
  for (const auto& rec : records) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Acc& a) { return a.n == rec.n; });
    if (it == groups.end()) {
      groups.push_back({rec.n, 0, 0, 0});
      it = std::prev(groups.end());
    }
    ++it->count;
    if (rec.capped) {
      ++it->capped;
    } else {
      it->sum_log2 += std::log2(static_cast<double>(rec.expansions));
    }
  }
  std::sort(groups.begin(), groups.end(), [](const Acc& a, const Acc& b) { return a.n < b.n; });

  GrowthReport report;
  for (const Acc& acc : groups) {
    GrowthPoint pt;
    pt.n = acc.n;
    pt.records = acc.count;
    pt.capped = acc.capped;
    report.capped_total += acc.capped;
    const int uncapped = acc.count - acc.capped;
    if (uncapped > 0) {
      pt.mean_log2_expansions = acc.sum_log2 / uncapped;
      pt.rate = pt.mean_log2_expansions / acc.n;
    }
    pt.valid = uncapped > 0 && acc.capped <= acc.count / 5.0;
    report.per_n.push_back(pt);
  }

  // Least-squares slope of mean log2 expansions against n over valid points.
  std::vector<const GrowthPoint*> valid;
  for (const auto& pt : report.per_n)
    if (pt.valid) valid.push_back(&pt);
  if (valid.size() >= 2) {
    double mean_x = 0, mean_y = 0;
    for (const auto* pt : valid) {
      mean_x += pt->n;
      mean_y += pt->mean_log2_expansions;
    }
    mean_x /= static_cast<double>(valid.size());
    mean_y /= static_cast<double>(valid.size());
    double sxx = 0, sxy = 0;
    for (const auto* pt : valid) {
      const double dx = pt->n - mean_x;
      sxx += dx * dx;
      sxy += dx * (pt->mean_log2_expansions - mean_y);
    }
    if (sxx > 0) report.slope = sxy / sxx;
  }
  return report;
}

MonteCarloResult monte_carlo_expected_ds(int n, double p, int samples,
                                         std::uint64_t master_seed) {
  if (n < 0 || n > kMonteCarloMaxN)
    throw std::invalid_argument("monte_carlo_expected_ds: need 0 <= n <= " +
                                std::to_string(kMonteCarloMaxN));
  if (samples < 1) throw std::invalid_argument("monte_carlo_expected_ds: samples >= 1");

  double mean = 0, m2 = 0;
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t seed = mix64(master_seed ^ static_cast<std::uint64_t>(i));
    const Graph g = gnp_sample(n, p, seed);
    const double x = static_cast<double>(count_dominating_sets(g));
    // Welford update
    const double delta = x - mean;
    mean += delta / (i + 1);
    m2 += delta * (x - mean);
  }
  MonteCarloResult res;
  res.mean = mean;
  if (samples > 1)
    res.stderr_mean = std::sqrt(m2 / (samples - 1)) / std::sqrt(static_cast<double>(samples));
  return res;
}

void write_csv(std::ostream& out, std::span<const ExperimentRecord> records) {
  out << "regime,param,n,p,trial,seed,algorithm,expansions,opt_size,capped\n";
  for (const auto& rec : records) {
    out << rec.regime << ',' << format_double(rec.param) << ',' << rec.n << ','
        << format_double(rec.p) << ',' << rec.trial << ',' << rec.seed << ',' << rec.algorithm
        << ',' << rec.expansions << ',';
    if (rec.opt_size) out << *rec.opt_size;
    out << ',' << (rec.capped ? "true" : "false") << '\n';
  }
}

void write_csv_file(const std::string& path, std::span<const ExperimentRecord> records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_csv(out, records);
  out.flush();
  if (!out) throw std::runtime_error("failed writing csv file: " + path);
}

std::vector<ExperimentRecord> read_csv(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) fail_line(1, "missing csv header");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "regime,param,n,p,trial,seed,algorithm,expansions,opt_size,capped")
    fail_line(lineno, "unexpected csv header");

  std::vector<ExperimentRecord> records;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 10) fail_line(lineno, "expected 10 fields");

    try {
      ExperimentRecord rec;
      rec.regime = fields[0];
      rec.param = std::stod(fields[1]);
      rec.n = std::stoi(fields[2]);
      rec.p = std::stod(fields[3]);
      rec.trial = std::stoi(fields[4]);
      rec.seed = std::stoull(fields[5]);
      rec.algorithm = fields[6];
      rec.expansions = std::stoull(fields[7]);
      if (!fields[8].empty()) rec.opt_size = std::stoi(fields[8]);
      if (fields[9] == "true") {
        rec.capped = true;
      } else if (fields[9] == "false") {
        rec.capped = false;
      } else {
        fail_line(lineno, "capped must be true or false");
      }
      records.push_back(std::move(rec));
    } catch (const std::runtime_error&) {
      throw;
    } catch (const std::exception&) {
      fail_line(lineno, "malformed numeric field");
    }
  }
  return records;
}

std::vector<ExperimentRecord> read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open csv file: " + path);
  return read_csv(in);
}

}  // namespace harness
}  // namespace domset
