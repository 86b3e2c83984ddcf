#include "domset/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace domset {
namespace bounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double>& terms) {
  double hi = -kInf;
  for (double t : terms) hi = std::max(hi, t);
  if (hi == -kInf) return -kInf;
  double acc = 0;
  for (double t : terms) acc += std::exp(t - hi);
  return hi + std::log(acc);
}

}  // namespace

double log_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("log_binomial: need 0 <= k <= n");
  const long double r = std::lgamma(static_cast<long double>(n) + 1.0L) -
                        std::lgamma(static_cast<long double>(k) + 1.0L) -
                        std::lgamma(static_cast<long double>(n - k) + 1.0L);
  return static_cast<double>(r);
}

double m_upper_log(std::int64_t n, std::int64_t k, double p) {
  if (k < 1 || k > n) throw std::invalid_argument("m_upper_log: need 1 <= k <= n");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("m_upper_log: need 0 < p <= 1");
  const std::int64_t x = n - k;
  return 2.0 * log_binomial(n, x) - p * static_cast<double>(x) * static_cast<double>(x - 1) / 2.0;
}

double binary_entropy(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("binary_entropy: eps in [0,1]");
  if (eps == 0.0 || eps == 1.0) return 0.0;
  return -eps * std::log2(eps) - (1.0 - eps) * std::log2(1.0 - eps);
}

double f_eps(double eps, double c) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("f_eps: eps in (0,1)");
  if (!(c > 0.0)) throw std::invalid_argument("f_eps: c > 0");
  const double entropy_nats = -eps * std::log(eps) - (1.0 - eps) * std::log1p(-eps);
  return std::exp(2.0 * entropy_nats - c * eps * eps / 2.0);
}

std::vector<IntervalRow> verify_interval_table(double c, int grid_points) {
  if (grid_points < 2) throw std::invalid_argument("verify_interval_table: grid too small");
  // First row's 1.99 comes from the coarse substitution argument; the rest
  // are the stated refined bounds.
  const std::vector<IntervalRow> table = {
      {1.0 / 10, 1.0 / 8, 1.99, 0, false},  {1.0 / 8, 1.0 / 7, 1.943, 0, false},
      {1.0 / 7, 0.15, 1.9, 0, false},       {0.15, 0.17, 1.988, 0, false},
      {0.17, 0.19, 1.981, 0, false},        {0.19, 0.21, 1.95, 0, false},
      {0.21, 0.25, 1.982, 0, false},        {0.25, 0.35, 1.955, 0, false},
      {0.35, 0.5, 1.2, 0, false},
  };
  std::vector<IntervalRow> rows;
  rows.reserve(table.size());
  for (IntervalRow row : table) {
    double max_val = -kInf;
    for (int i = 0; i <= grid_points; ++i) {
      const double eps = row.lo + (row.hi - row.lo) * i / grid_points;
      max_val = std::max(max_val, f_eps(eps, c));
    }
    row.grid_max = max_val;
    row.pass = max_val < row.stated_bound;
    rows.push_back(row);
  }
  return rows;
}

double theorem2_eps(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("theorem2_eps: c > 0");
  return std::max(0.99, 1.0 - 1.0 / (10.0 * c));
}

Theorem2Bound theorem2_prob_bound(double c, double eps) {
  if (!(c > 0.0)) throw std::invalid_argument("theorem2_prob_bound: c > 0");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("theorem2_prob_bound: eps in (0,1)");
  const double inner = std::pow(-std::expm1(-2.0 * c * (1.0 - eps)), eps);
  return {inner, 2.0 * inner};
}

double theorem2_lower_base(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("theorem2_lower_base: eps in (0,1]");
  return std::exp(-eps * std::log(eps));
}

double expected_dominating_sets_log(int n, double p) {
  if (n < 0) throw std::invalid_argument("expected_dominating_sets: n >= 0");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("expected_dominating_sets: p in [0,1]");
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(n) + 1);
  terms.push_back(0.0);  // k = 0: the full set always dominates
  for (int k = 1; k <= n; ++k) {
    if (k == n) continue;  // (1 - (1-p)^0)^n = 0 for n >= 1
    const double excluded_free = static_cast<double>(n - k) * std::log1p(-p);
    const double inner = -std::expm1(excluded_free);  // 1 - (1-p)^(n-k)
    if (inner <= 0.0) continue;
    terms.push_back(log_binomial(n, k) + k * std::log(inner));
  }
  return log_sum_exp(terms);
}

double expected_dominating_sets(int n, double p) {
  return std::exp(expected_dominating_sets_log(n, p));
}

double lambert_w(double x) {
  constexpr double kInvE = 0.367879441171442322;
  if (std::isnan(x) || x < -kInvE - 1e-12) throw std::domain_error("lambert_w: x < -1/e");
  x = std::max(x, -kInvE);
  if (x == 0.0) return 0.0;

  double w;
  if (x < -0.25) {
    // Series around the branch point x = -1/e.
    const double q = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
    w = -1.0 + q - q * q / 3.0 + 11.0 * q * q * q / 72.0;
  } else if (x < 0.0) {
    w = x;
  } else {
    w = std::log1p(x);
  }

  const double tol = 1e-13 * std::max(1.0, std::abs(x));
  for (int it = 0; it < 100; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= tol) break;
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    w -= f / denom;
  }
  return w;
}

double g_plus(double j) {
  if (j < 0.0 || std::isnan(j)) throw std::domain_error("g_plus: j >= 0");
  if (j == 0.0) return 1.0;  // W(j)/j -> 1
  return std::exp(1.0 - lambert_w(j) / j);
}

double g_minus(double j) {
  if (!(j > 0.0)) throw std::domain_error("g_minus: j > 0");
  constexpr double kInvE = 0.367879441171442322;
  const double arg = j * std::exp(-j - 1.0 + j * kInvE);
  return std::exp(kInvE - lambert_w(arg) / j);
}

namespace {

// log of the per-n factor [(e/i)(1 - e^(j(i-1)))]^i
double tnp_log_factor(double i, double j) {
  return i * (1.0 - std::log(i) + std::log(-std::expm1(j * (i - 1.0))));
}

// Sign factor of the stationarity condition 1 - e^(j(i-1)) = i; strictly
// decreasing in i with a single root on (0,1).
double tnp_stationarity(double i, double j) {
  return std::log(-std::expm1(j * (i - 1.0))) - std::log(i);
}

}  // namespace

TnpGridResult tnp_upper_grid(std::int64_t n, double j, int grid_points) {
  if (!(j > 0.0)) throw std::invalid_argument("tnp_upper_grid: j > 0");
  if (n < 1) throw std::invalid_argument("tnp_upper_grid: n >= 1");
  if (grid_points < 10) throw std::invalid_argument("tnp_upper_grid: grid too small");

  double best_log = -kInf;
  double best_i = 0;
  double lo = 0, hi = 1;
  for (int k = 1; k < grid_points; ++k) {
    const double i = static_cast<double>(k) / grid_points;
    const double log_f = tnp_log_factor(i, j);
    if (log_f > best_log) {
      best_log = log_f;
      best_i = i;
    }
    if (tnp_stationarity(i, j) > 0.0) {
      lo = i;
    } else if (hi == 1.0) {
      hi = i;
    }
  }
  if (lo == 0.0) lo = 0.5 / grid_points;
  for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    (tnp_stationarity(mid, j) > 0.0 ? lo : hi) = mid;
  }
  const double root = 0.5 * (lo + hi);

  TnpGridResult res;
  res.argmax = root;
  res.base = std::exp(tnp_log_factor(root, j));
  res.raw_grid_max = std::exp(best_log);
  res.raw_grid_argmax = best_i;
  res.log_total =
      2.0 * std::log(static_cast<double>(n)) + static_cast<double>(n) * std::log(res.base);
  return res;
}

double exhaustive_upper_c(double c, ExhaustiveBoundVariant variant) {
  if (!(c > 1.0)) throw std::invalid_argument("exhaustive_upper_c: c > 1");
  const double t = variant == ExhaustiveBoundVariant::Statement ? 2.0 * c : 4.0 * c / 3.0;
  const double inner = 2.0 * std::cbrt(-std::expm1(-t));
  return std::max(1.99, inner);
}

}  // namespace bounds
}  // namespace domset
