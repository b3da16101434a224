#include <algorithm>
#include <cmath>
#include <sstream>

#include "skewlab/mechanisms.hpp"

namespace skewlab {

MarshallOlkin::MarshallOlkin(double gamma) : gamma_(gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ParameterError("marshall-olkin: gamma must be positive and finite");
  }
}

// x and 1-x enter linearly, so both are taken from the point as stored.
double MarshallOlkin::log_p(const UnitPoint& pt) const {
  return std::log(gamma_) - 2.0 * std::log(pt.x() + gamma_ * pt.complement());
}

LogProb MarshallOlkin::log_cdf(const UnitPoint& pt) const {
  return LogProb(
      std::min(0.0, pt.log_x() - std::log(pt.x() + gamma_ * pt.complement())));
}

LogProb MarshallOlkin::log_sf(const UnitPoint& pt) const {
  return LogProb(std::min(0.0, std::log(gamma_) + pt.log_complement() -
                                   std::log(pt.x() + gamma_ * pt.complement())));
}

UnitPoint MarshallOlkin::quantile_point(double q) const {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("quantile_P: q must lie in (0,1)");
  const double denom = (1.0 - q) + gamma_ * q;
  const double x = gamma_ * q / denom;
  if (x <= 0.5) return UnitPoint::from_probability(x);
  return UnitPoint::from_complement((1.0 - q) / denom);
}

std::optional<double> MarshallOlkin::analytic_sup() const {
  return std::max(gamma_, 1.0 / gamma_);
}

std::string MarshallOlkin::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "marshall-olkin gamma=" << gamma_;
  return os.str();
}

double mo_cdf_P(double gamma, double x) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("mo_cdf_P: gamma must be positive");
  }
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("mo_cdf_P: x must lie in [0,1]");
  return x / (gamma + (1.0 - gamma) * x);
}

}  // namespace skewlab
