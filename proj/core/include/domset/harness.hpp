#ifndef DOMSET_HARNESS_HPP
#define DOMSET_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace domset {
namespace harness {

enum class RegimeKind { FixedP, COverN, FOverN };
enum class GrowthFunction { Log, Sqrt };

// Rule mapping n to an edge probability: p fixed, p = c/n, or p = f(n)/n.
struct Regime {
  RegimeKind kind = RegimeKind::FixedP;
  double param = 0.5;  // p for FixedP, c for COverN, unused for FOverN
  GrowthFunction f = GrowthFunction::Log;

  // "fixed_p", "c_over_n", "f_over_n_log", "f_over_n_sqrt"
  std::string name() const;
  static Regime from_name(const std::string& name, double param);
};

// Resolved probability for (regime, n), clamped from above to 1. Throws if
// the regime yields p <= 0 (f = log at n = 1) or fixed p outside (0, 1].
double resolve_p(const Regime& regime, int n);

struct ExperimentRecord {
  std::string regime;
  double param = 0;
  int n = 0;
  double p = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::uint64_t expansions = 0;
  std::optional<int> opt_size;  // absent when capped
  bool capped = false;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

// Documented seed chain: h = mix64(master ^ 0x747269616c5345ULL), then fold
// in the regime tag, the parameter bits, n, and the trial index with one
// mix64 round each. Any trial is reproducible in isolation.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, const Regime& regime, int n,
                                int trial);

// Samples G(n, resolve_p(regime, n)) with the derived seed and runs the
// named solver ("bb", "bb_rand", or "exhaustive"). A capped solve yields a
// capped record, not an error.
ExperimentRecord run_trial(const Regime& regime, int n, int trial, std::uint64_t master_seed,
                           const std::string& algo, std::uint64_t cap);

// Runs all (n, trial) pairs, optionally on several threads, and returns the
// records sorted by (n, trial); output is a pure function of the arguments.
std::vector<ExperimentRecord> sweep(const Regime& regime, std::span<const int> n_list,
                                    int trials, std::uint64_t master_seed,
                                    const std::string& algo, std::uint64_t cap,
                                    unsigned threads = 1);

struct GrowthPoint {
  int n = 0;
  int records = 0;
  int capped = 0;
  double mean_log2_expansions = 0;  // over uncapped records
  double rate = 0;                  // mean_log2_expansions / n
  bool valid = false;               // some uncapped data and capped fraction <= 20%
};

struct GrowthReport {
  std::vector<GrowthPoint> per_n;
  std::optional<double> slope;  // least-squares slope of mean log2 expansions vs n
  int capped_total = 0;
};

// Per-n normalized growth rates and the least-squares slope over valid
// points. Capped records are excluded from means but counted; a capped
// fraction above 20% invalidates that n. slope is absent with fewer than
// two valid distinct n.
GrowthReport growth_rate(std::span<const ExperimentRecord> records);

inline constexpr int kMonteCarloMaxN = 15;

struct MonteCarloResult {
  double mean = 0;
  double stderr_mean = 0;
};

// Sample mean and standard error of count_dominating_sets over independent
// G(n,p) samples. Requires n <= kMonteCarloMaxN.
MonteCarloResult monte_carlo_expected_ds(int n, double p, int samples,
                                         std::uint64_t master_seed);

// CSV persistence. Columns, in order:
//   regime,param,n,p,trial,seed,algorithm,expansions,opt_size,capped
// Header row mandatory; opt_size empty when capped; floats with 17
// significant digits so records round-trip exactly.
void write_csv(std::ostream& out, std::span<const ExperimentRecord> records);
void write_csv_file(const std::string& path, std::span<const ExperimentRecord> records);
std::vector<ExperimentRecord> read_csv(std::istream& in);
std::vector<ExperimentRecord> read_csv_file(const std::string& path);

}  // namespace harness
}  // namespace domset

#endif
