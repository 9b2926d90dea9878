#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "vetomanip/generator.hpp"

namespace vetomanip {

/// One experiment datum: the generating parameters, the estimated
/// manipulability probability with a 95% half-width, and the search-cost
/// statistics over all trials.
struct CurvePoint {
  GeneratorSpec spec;
  std::uint64_t trials = 0;
  double p_hat = 0.0;
  double ci_halfwidth = 0.0;
  double branch_mean = 0.0;
  double branch_median = 0.0;
  std::uint64_t branch_max = 0;
  double x_rescaled = 0.0;  // m / sqrt(n); NaN when n == 0
};

/// Residuals of estimated probabilities against the fixed rescaled curve
/// 1 - (2/3) exp(-x). No parameters are fitted.
struct FitReport {
  std::vector<std::pair<double, double>> points;  // (x_rescaled, p_hat)
  double max_abs_residual = 0.0;
  double rms_residual = 0.0;
};

struct QuadratureOptions {
  double abs_tol = 1e-9;
  double trunc_sigmas = 12.0;  // outer integral truncated at mu + trunc_sigmas*sigma
};

/// Estimate of how often an instance falls into the narrow band where the
/// partitioning search has to work hard: the overlap probability of the
/// coalition-weight and deficit distributions within a window alpha*sqrt(m).
struct HardBoundResult {
  double numeric = 0.0;     // quadrature of the two-Gaussian band integral
  double asymptotic = 0.0;  // collapsed upper bound alpha*sqrt(m)/sqrt(4*pi*n*k^2/3)
  double abs_error = 0.0;   // quadrature error estimate
};

/// 95% half-width: normal approximation with continuity correction, switching
/// to a Wilson interval when fewer than 10 successes were observed.
double binomial_ci_halfwidth(std::uint64_t successes, std::uint64_t trials);

/// The fixed rescaled probability curve 1 - (2/3) exp(-x).
double universal_form(double x);

using InstanceSource = std::function<ManipulationInstance(std::uint64_t)>;

/// Monte-Carlo estimate over `trials` generated instances. The result is a
/// pure function of (spec, trials); `workers` only spreads trials over
/// threads.
CurvePoint estimate_point(const GeneratorSpec& spec, std::uint64_t trials, int workers = 1);

/// Same aggregation over an arbitrary instance source (calibration hook).
CurvePoint estimate_point_with(const InstanceSource& source, std::uint64_t trials,
                               int workers = 1);

/// Per-point parameter overrides applied on top of a base spec.
struct SweepOverride {
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> k_prime;
};

GeneratorSpec apply_override(GeneratorSpec base, const SweepOverride& over);

std::vector<CurvePoint> probability_curve(const GeneratorSpec& base,
                                          const std::vector<SweepOverride>& sweep,
                                          std::uint64_t trials, int workers = 1);

/// Identical sweep; consumers read the branch statistics.
std::vector<CurvePoint> cost_curve(const GeneratorSpec& base,
                                   const std::vector<SweepOverride>& sweep,
                                   std::uint64_t trials, int workers = 1);

FitReport fit_universal(const std::vector<CurvePoint>& points);

HardBoundResult hard_bound(std::int64_t m, std::int64_t n, std::int64_t k, double alpha,
                           const QuadratureOptions& opts = {});

}  // namespace vetomanip
