#pragma once

#include <string>

#include "skewlab/numcore.hpp"
#include "skewlab/rng.hpp"

namespace skewlab {

using numcore::LogProb;
using numcore::Tolerance;

/// Absolutely continuous law on the real line. Survival functions are
/// first-class: log_sf must stay accurate where 1 - cdf is numerically zero.
class ContinuousDistribution {
 public:
  virtual ~ContinuousDistribution() = default;

  virtual double log_pdf(double y) const = 0;
  virtual LogProb log_cdf(double y) const = 0;
  virtual LogProb log_sf(double y) const = 0;
  virtual double quantile(double q) const;
  virtual std::string describe() const = 0;

  double pdf(double y) const;
  /// Picks whichever of exp(log_cdf) and 1 - exp(log_sf) loses fewer digits.
  double cdf(double y) const;
  double sf(double y) const;
  double sample(RngState& rng) const { return quantile(rng.next_unit()); }
};

/// Root-finds cdf(y) = q on an expanding bracket around `guess`, matching the
/// log-cdf in the lower half and the log-survival in the upper half so that
/// tail quantiles keep their relative accuracy.
double quantile_by_inversion(const ContinuousDistribution& dist, double q,
                             double guess = 0.0, const Tolerance& tol = {});

/// F = Phi, the base of every skewing construction.
class StandardNormal final : public ContinuousDistribution {
 public:
  double log_pdf(double y) const override { return numcore::log_normal_pdf(y); }
  LogProb log_cdf(double y) const override { return numcore::log_normal_cdf(y); }
  LogProb log_sf(double y) const override { return numcore::log_normal_sf(y); }
  double quantile(double q) const override { return numcore::normal_quantile(q); }
  std::string describe() const override { return "standard-normal"; }
};

/// ln[cdf(-y) + sf(y)], the two-sided mass outside [-y, y], by log-sum-exp.
LogProb log_tail_mass(const ContinuousDistribution& dist, double y);

}  // namespace skewlab
