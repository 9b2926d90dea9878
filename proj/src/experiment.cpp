#include "vetomanip/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

namespace vetomanip {
namespace {

constexpr double kZ95 = 1.959963984540054;

double standard_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

struct Quadrature {
  double value = 0.0;
  double err = 0.0;
  bool converged = true;

  static double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  template <typename F>
  void refine(const F& f, double a, double b, double fa, double fm, double fb, double whole,
              double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double lm = 0.5 * (a + mid);
    const double rm = 0.5 * (mid + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, mid, fa, flm, fm);
    const double right = simpson(mid, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
      if (depth <= 0 && std::abs(delta) > 15.0 * tol) converged = false;
      value += left + right + delta / 15.0;
      err += std::abs(delta) / 15.0;
      return;
    }
    refine(f, a, mid, fa, flm, fm, left, 0.5 * tol, depth - 1);
    refine(f, mid, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
  }
};

// Adaptive Simpson over [a, b], seeded with a uniform panel split so narrow
// features cannot slip between the first probe points.
template <typename F>
Quadrature integrate(const F& f, double a, double b, double abs_tol) {
  constexpr int kPanels = 64;
  constexpr int kMaxDepth = 48;
  Quadrature q;
  const double h = (b - a) / kPanels;
  double x0 = a;
  double f0 = f(x0);
  for (int i = 0; i < kPanels; ++i) {
    const double x1 = (i + 1 == kPanels) ? b : a + (i + 1) * h;
    const double xm = 0.5 * (x0 + x1);
    const double f1 = f(x1);
    const double fm = f(xm);
    q.refine(f, x0, x1, f0, fm, f1, Quadrature::simpson(x0, x1, f0, fm, f1),
             abs_tol / kPanels, kMaxDepth);
    x0 = x1;
    f0 = f1;
  }
  return q;
}

struct TrialAggregate {
  std::uint64_t successes = 0;
  std::vector<std::uint64_t> branches;
};

TrialAggregate run_trials(const InstanceSource& source, std::uint64_t trials, int workers) {
  if (trials == 0) throw std::invalid_argument("experiment: trials must be >= 1");
  if (workers < 1) workers = 1;
  const std::uint64_t pool =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), trials);

  std::vector<std::uint8_t> wins(trials, 0);
  std::vector<std::uint64_t> branches(trials, 0);
  const auto strided = [&](std::uint64_t first) {
    for (std::uint64_t t = first; t < trials; t += pool) {
      const ManipulationInstance inst = source(t);
      const ManipulationResult res = decide_manipulation(inst);
      wins[t] = res.manipulable ? 1 : 0;
      branches[t] = res.stats.branches;
    }
  };

  if (pool == 1) {
    strided(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (std::uint64_t w = 0; w < pool; ++w) threads.emplace_back(strided, w);
    for (auto& th : threads) th.join();
  }

  TrialAggregate agg;
  for (std::uint8_t w : wins) agg.successes += w;
  agg.branches = std::move(branches);
  return agg;
}

CurvePoint summarize(TrialAggregate agg, std::uint64_t trials) {
  CurvePoint pt;
  pt.trials = trials;
  pt.p_hat = static_cast<double>(agg.successes) / static_cast<double>(trials);
  pt.ci_halfwidth = binomial_ci_halfwidth(agg.successes, trials);

  double sum = 0.0;
  for (std::uint64_t v : agg.branches) sum += static_cast<double>(v);
  pt.branch_mean = sum / static_cast<double>(trials);
  std::sort(agg.branches.begin(), agg.branches.end());
  pt.branch_max = agg.branches.back();
  const std::size_t mid = agg.branches.size() / 2;
  pt.branch_median = agg.branches.size() % 2 == 1
                         ? static_cast<double>(agg.branches[mid])
                         : 0.5 * (static_cast<double>(agg.branches[mid - 1]) +
                                  static_cast<double>(agg.branches[mid]));
  return pt;
}

}  // namespace

double binomial_ci_halfwidth(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("experiment: trials must be >= 1");
  if (successes > trials) throw std::invalid_argument("experiment: successes exceed trials");
  const double t = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / t;
  if (successes < 10) {
    // Wilson interval below 10 successes; the Wald width collapses there.
    const double z2 = kZ95 * kZ95;
    return kZ95 * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t)) / (1.0 + z2 / t);
  }
  return kZ95 * std::sqrt(p * (1.0 - p) / t) + 0.5 / t;
}

double universal_form(double x) { return 1.0 - (2.0 / 3.0) * std::exp(-x); }

CurvePoint estimate_point(const GeneratorSpec& spec, std::uint64_t trials, int workers) {
  validate_spec(spec);
  CurvePoint pt = estimate_point_with(
      [&spec](std::uint64_t trial) { return generate(spec, trial); }, trials, workers);
  pt.spec = spec;
  pt.x_rescaled = spec.n > 0 ? static_cast<double>(spec.m) / std::sqrt(static_cast<double>(spec.n))
                             : std::numeric_limits<double>::quiet_NaN();
  return pt;
}

CurvePoint estimate_point_with(const InstanceSource& source, std::uint64_t trials, int workers) {
  CurvePoint pt = summarize(run_trials(source, trials, workers), trials);
  pt.x_rescaled = std::numeric_limits<double>::quiet_NaN();
  return pt;
}

GeneratorSpec apply_override(GeneratorSpec base, const SweepOverride& over) {
  if (over.n) base.n = *over.n;
  if (over.m) base.m = *over.m;
  if (over.k) base.k = *over.k;
  if (over.k_prime) base.k_prime = *over.k_prime;
  return base;
}

std::vector<CurvePoint> probability_curve(const GeneratorSpec& base,
                                          const std::vector<SweepOverride>& sweep,
                                          std::uint64_t trials, int workers) {
  if (sweep.empty()) throw std::invalid_argument("experiment: sweep must be non-empty");
  std::vector<CurvePoint> points;
  points.reserve(sweep.size());
  for (const SweepOverride& over : sweep) {
    points.push_back(estimate_point(apply_override(base, over), trials, workers));
  }
  return points;
}

std::vector<CurvePoint> cost_curve(const GeneratorSpec& base,
                                   const std::vector<SweepOverride>& sweep,
                                   std::uint64_t trials, int workers) {
  return probability_curve(base, sweep, trials, workers);
}

FitReport fit_universal(const std::vector<CurvePoint>& points) {
  if (points.empty()) throw std::invalid_argument("fit_universal: no points");
  FitReport report;
  report.points.reserve(points.size());
  double sum_sq = 0.0;
  for (const CurvePoint& pt : points) {
    if (pt.spec.n <= 0) throw std::invalid_argument("fit_universal: every point needs n > 0");
    const double residual = pt.p_hat - universal_form(pt.x_rescaled);
    report.points.emplace_back(pt.x_rescaled, pt.p_hat);
    report.max_abs_residual = std::max(report.max_abs_residual, std::abs(residual));
    sum_sq += residual * residual;
  }
  report.rms_residual = std::sqrt(sum_sq / static_cast<double>(points.size()));
  return report;
}

HardBoundResult hard_bound(std::int64_t m, std::int64_t n, std::int64_t k, double alpha,
                           const QuadratureOptions& opts) {
  if (m < 1 || n < 1 || k < 1) {
    throw std::invalid_argument("hard_bound: m, n, k must be >= 1");
  }
  if (alpha < 0.0) throw std::invalid_argument("hard_bound: alpha must be >= 0");

  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double mu = 0.5 * md * kd;                    // coalition-weight mean
  const double sigma = std::sqrt(2.0 * md / 3.0) * kd;  // coalition-weight sd
  const double s = std::sqrt(2.0 * nd / 3.0) * kd;      // deficit sd
  const double band = alpha * std::sqrt(md);

  HardBoundResult result;
  result.asymptotic = band / (kd * std::sqrt(4.0 * std::numbers::pi * nd / 3.0));
  if (band == 0.0) return result;

  const auto integrand = [&](double x) {
    const double u = (x - mu) / sigma;
    const double density = std::exp(-0.5 * u * u) /
                           (sigma * std::sqrt(2.0 * std::numbers::pi));
    return density * (standard_normal_cdf(x / s) - standard_normal_cdf((x - band) / s));
  };
  const Quadrature q = integrate(integrand, 0.0, mu + opts.trunc_sigmas * sigma, opts.abs_tol);
  if (!q.converged) {
    throw std::runtime_error("hard_bound: quadrature did not converge, achieved tolerance " +
                             std::to_string(q.err));
  }
  result.numeric = q.value;
  result.abs_error = q.err;
  return result;
}

}  // namespace vetomanip
