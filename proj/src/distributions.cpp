#include "skewlab/distributions.hpp"

#include <algorithm>
#include <cmath>

namespace skewlab {

using numcore::kEps;
using numcore::kInf;
using numcore::kLn2;

double ContinuousDistribution::pdf(double y) const { return std::exp(log_pdf(y)); }

double ContinuousDistribution::cdf(double y) const {
  const double lc = log_cdf(y).value();
  if (lc < -kLn2) return std::exp(lc);
  return -std::expm1(log_sf(y).value());
}

double ContinuousDistribution::sf(double y) const {
  const double ls = log_sf(y).value();
  if (ls < -kLn2) return std::exp(ls);
  return -std::expm1(log_cdf(y).value());
}

double ContinuousDistribution::quantile(double q) const {
  return quantile_by_inversion(*this, q);
}

double quantile_by_inversion(const ContinuousDistribution& dist, double q,
                             double guess, const Tolerance& tol) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("quantile: q must lie in (0,1)");
  }
  if (!std::isfinite(guess)) guess = 0.0;
  // Newton on the log-cdf (lower half) or the negated log-survival (upper
  // half); both are increasing with derivative pdf / mass. Every evaluation
  // tightens a bracket and steps that leave it fall back to bisection.
  const bool lower = q <= 0.5;
  const double target = lower ? std::log(q) : std::log1p(-q);
  double lo = -kInf;
  double hi = kInf;
  double y = guess;
  double last_step = 1.0;
  for (int it = 0; it < tol.max_iter; ++it) {
    const double mass = lower ? dist.log_cdf(y).value() : dist.log_sf(y).value();
    const double r = lower ? mass - target : target - mass;
    if (r == 0.0) return y;
    if (r > 0.0) {
      hi = y;
    } else {
      lo = y;
    }
    const double slope = std::exp(dist.log_pdf(y) - mass);
    double next = y - r / slope;
    // While one side is still unbracketed, steps into it grow at most
    // geometrically; a flat far tail would otherwise throw Newton miles off.
    const bool open_side = r > 0.0 ? lo == -kInf : hi == kInf;
    const double jump = std::max(1.0, 2.0 * std::abs(last_step));
    if (open_side && !(std::abs(next - y) <= jump)) {
      next = r > 0.0 ? y - jump : y + jump;
    } else if (!(next >= lo && next <= hi)) {
      next = 0.5 * (lo + hi);
    }
    last_step = next - y;
    const double width_tol = std::max(tol.abs_tol, 4.0 * kEps * std::abs(next));
    if (std::abs(last_step) <= width_tol ||
        (std::isfinite(lo) && std::isfinite(hi) && hi - lo <= width_tol)) {
      return next;
    }
    if (std::abs(next) > 1e6) throw BracketingError("quantile: bracket runaway");
    y = next;
  }
  throw ConvergenceError("quantile: iteration budget exhausted", y,
                         std::isfinite(hi - lo) ? hi - lo : kInf);
}

LogProb log_tail_mass(const ContinuousDistribution& dist, double y) {
  if (!(y > 0.0) || !std::isfinite(y)) {
    throw DomainError("log_tail_mass: y must be positive and finite");
  }
  return LogProb(
      std::min(0.0, numcore::log_sum_exp(dist.log_cdf(-y).value(),
                                         dist.log_sf(y).value())));
}

}  // namespace skewlab
