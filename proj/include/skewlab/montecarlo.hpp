#pragma once

// Independent oracles for the closed forms: quadrature of the composed
// density, Kolmogorov-Smirnov goodness of fit and raw sample moments.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "skewlab/distributions.hpp"

namespace skewlab {

/// Asymptotic 1% critical constant of the Kolmogorov distribution.
inline constexpr double kKsCritical1pct = 1.6276;

struct KsResult {
  double statistic = 0.0;
  std::size_t n = 0;
  double critical_1pct = 0.0;
  bool passed() const noexcept { return statistic < critical_1pct; }
};

/// S(y) by adaptive quadrature of S.pdf over (-inf, y], split at the origin
/// (the two-piece knot) and at the numerical mode.
double oracle_cdf(const ContinuousDistribution& dist, double y,
                  const Tolerance& tol = Tolerance{1e-12, 1e-12, 400});

/// One-sample two-sided statistic sup |F_n - F|; critical value 1.6276/sqrt(n).
/// cdf is called concurrently from OpenMP threads and must be pure.
KsResult ks_test(std::span<const double> samples,
                 const std::function<double(double)>& cdf);
/// Two-sample statistic; critical value 1.6276 sqrt((n+m)/(n m)), n = size of
/// the first sample.
KsResult ks_two_sample(std::span<const double> first, std::span<const double> second);

/// Sample k-th raw moment, k in {1,2,3,4}.
double moment_estimate(std::span<const double> samples, int k);

}  // namespace skewlab
