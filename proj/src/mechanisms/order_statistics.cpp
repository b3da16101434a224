#include <cmath>
#include <sstream>

#include "skewlab/mechanisms.hpp"

namespace skewlab {

OrderStatistics::OrderStatistics(double psi1, double psi2, const Tolerance& tol)
    : SkewingMechanism(tol), psi1_(psi1), psi2_(psi2) {
  if (!(psi1 > 0.0) || !(psi2 > 0.0) || !std::isfinite(psi1) || !std::isfinite(psi2)) {
    throw ParameterError("orderstats: psi1 and psi2 must be positive and finite");
  }
  log_beta_ = numcore::log_beta(psi1, psi2);
}

double OrderStatistics::log_p(const UnitPoint& pt) const {
  return (psi1_ - 1.0) * pt.log_x() + (psi2_ - 1.0) * pt.log_complement() - log_beta_;
}

LogProb OrderStatistics::log_cdf(const UnitPoint& pt) const {
  return LogProb(numcore::log_reg_inc_beta(pt.log_x(), pt.log_complement(), psi1_, psi2_));
}

LogProb OrderStatistics::log_sf(const UnitPoint& pt) const {
  return LogProb(numcore::log_reg_inc_beta(pt.log_complement(), pt.log_x(), psi2_, psi1_));
}

UnitPoint OrderStatistics::quantile_point(double q) const {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("quantile_P: q must lie in (0,1)");
  const Tolerance& t = tolerance();
  const auto root = numcore::inv_reg_inc_beta_split(
      q, psi1_, psi2_, Tolerance{std::min(t.abs_tol, 1e-14), 1e-14, 400});
  return root.x <= 0.5 ? UnitPoint::from_probability(root.x)
                       : UnitPoint::from_complement(root.complement);
}

std::optional<double> OrderStatistics::analytic_sup() const {
  if (psi1_ < 1.0 || psi2_ < 1.0) return std::nullopt;
  if (psi1_ == 1.0 && psi2_ == 1.0) return 1.0;
  const double mode = (psi1_ - 1.0) / (psi1_ + psi2_ - 2.0);
  // 0 * ln 0 terms vanish when the mode sits on an endpoint.
  double log_value = -log_beta_;
  if (psi1_ != 1.0) log_value += (psi1_ - 1.0) * std::log(mode);
  if (psi2_ != 1.0) log_value += (psi2_ - 1.0) * std::log1p(-mode);
  return std::exp(log_value);
}

std::string OrderStatistics::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "orderstats psi1=" << psi1_ << " psi2=" << psi2_;
  return os.str();
}

}  // namespace skewlab
