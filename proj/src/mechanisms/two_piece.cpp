#include <algorithm>
#include <cmath>
#include <sstream>

#include "skewlab/mechanisms.hpp"

namespace skewlab {

using numcore::kLn2;

TwoPiece::TwoPiece(double a, double b) : a_(a), b_(b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ParameterError("twopiece: scales a and b must be positive and finite");
  }
}

std::shared_ptr<const TwoPiece> TwoPiece::epsilon_skew(double gamma) {
  if (!(gamma > -1.0 && gamma < 1.0)) {
    throw ParameterError("twopiece-eps: gamma must lie in (-1, 1)");
  }
  return std::make_shared<TwoPiece>(1.0 - gamma, 1.0 + gamma);
}

std::shared_ptr<const TwoPiece> TwoPiece::inverse_scale(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ParameterError("twopiece-isf: gamma must be positive");
  }
  return std::make_shared<TwoPiece>(1.0 / gamma, gamma);
}

// p(x) = 2/(a+b) phi(z/s)/phi(z) with z = Phi^{-1}(x), s = b below x = 1/2
// and s = a above it.
double TwoPiece::log_p(const UnitPoint& pt) const {
  const double z = pt.z();
  const double s = z < 0.0 ? b_ : a_;
  return kLn2 - std::log(a_ + b_) + 0.5 * z * z * (1.0 - 1.0 / (s * s));
}

LogProb TwoPiece::log_cdf(const UnitPoint& pt) const {
  const double z = pt.z();
  if (z < 0.0) {
    return LogProb(std::min(0.0, kLn2 + std::log(b_) - std::log(a_ + b_) +
                                     numcore::log_normal_cdf(z / b_).value()));
  }
  return LogProb(numcore::log1m_exp(log_sf(pt).value()));
}

LogProb TwoPiece::log_sf(const UnitPoint& pt) const {
  const double z = pt.z();
  if (z >= 0.0) {
    return LogProb(std::min(0.0, kLn2 + std::log(a_) - std::log(a_ + b_) +
                                     numcore::log_normal_sf(z / a_).value()));
  }
  return LogProb(numcore::log1m_exp(log_cdf(pt).value()));
}

UnitPoint TwoPiece::quantile_point(double q) const {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("quantile_P: q must lie in (0,1)");
  const double split = b_ / (a_ + b_);
  if (q < split) {
    return UnitPoint::from_base(b_ * numcore::normal_quantile(q * (a_ + b_) / (2.0 * b_)));
  }
  const double upper = (1.0 - q) * (a_ + b_) / (2.0 * a_);
  if (upper >= 0.5) return UnitPoint::from_base(0.0);
  return UnitPoint::from_base(-a_ * numcore::normal_quantile(upper));
}

std::optional<double> TwoPiece::analytic_sup() const {
  if (std::max(a_, b_) > 1.0) return std::nullopt;
  return 2.0 / (a_ + b_);
}

std::string TwoPiece::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "twopiece a=" << a_ << " b=" << b_;
  return os.str();
}

double twopiece_cdf(double a, double b, double y) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("twopiece_cdf: a, b must be positive");
  if (std::isnan(y)) throw DomainError("twopiece_cdf: y is NaN");
  if (std::isinf(y)) return y < 0.0 ? 0.0 : 1.0;
  if (y < 0.0) return 2.0 * b / (a + b) * numcore::normal_cdf(y / b);
  return (b - a) / (a + b) + 2.0 * a / (a + b) * numcore::normal_cdf(y / a);
}

}  // namespace skewlab
