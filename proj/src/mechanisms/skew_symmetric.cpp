#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "skewlab/mechanisms.hpp"

namespace skewlab {

using numcore::kInf;
using numcore::kLn2;

namespace {

std::string label_with(const char* name, const char* param, double value) {
  std::ostringstream os;
  os.precision(17);
  os << name << ' ' << param << '=' << value;
  return os.str();
}

// Quadrature settings for the tail integrals: relative accuracy only, since
// the integrals are already scaled to be of order one.
constexpr Tolerance kTailQuadrature{1e-300, 1e-12, 200};
constexpr double kDirectPiFloor = -30.0;

constexpr double kGuessLo = -8.0;
constexpr double kGuessStep = 0.25;
constexpr int kGuessPoints = 65;

// Linear interpolation of z against an increasing column of log masses;
// NaN when the target falls outside the tabulated range.
double interpolate_z(const std::vector<double>& column, double target, bool increasing) {
  const auto n = static_cast<int>(column.size());
  for (int k = 0; k + 1 < n; ++k) {
    const double a = column[k];
    const double b = column[k + 1];
    if (!std::isfinite(a) || !std::isfinite(b)) continue;
    const bool inside = increasing ? (a <= target && target <= b) : (b <= target && target <= a);
    if (inside && a != b) {
      return kGuessLo + kGuessStep * (k + (target - a) / (b - a));
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

SkewingFunction azzalini_pi(double alpha) {
  if (!std::isfinite(alpha)) throw ParameterError("azzalini: alpha must be finite");
  return SkewingFunction{
      [alpha](double y) { return numcore::normal_cdf(alpha * y); },
      [alpha](double y) { return numcore::log_normal_cdf(alpha * y).value(); },
      label_with("azzalini", "alpha", alpha)};
}

SkewingFunction logistic_pi(double lambda) {
  if (!std::isfinite(lambda)) throw ParameterError("logistic: lambda must be finite");
  return SkewingFunction{
      [lambda](double y) { return 1.0 / (1.0 + std::exp(-lambda * y)); },
      [lambda](double y) {
        const double t = lambda * y;
        return t >= 0.0 ? -std::log1p(std::exp(-t)) : t - std::log1p(std::exp(t));
      },
      label_with("logistic", "lambda", lambda)};
}

SkewingFunction half_pi() {
  return SkewingFunction{[](double) { return 0.5; }, [](double) { return -kLn2; },
                         "half"};
}

SkewingFunction positive_step_pi() {
  return SkewingFunction{
      [](double y) { return y > 0.0 ? 1.0 : (y == 0.0 ? 0.5 : 0.0); },
      [](double y) { return y > 0.0 ? 0.0 : (y == 0.0 ? -kLn2 : -kInf); },
      "positive-step"};
}

SkewSymmetric::SkewSymmetric(SkewingFunction pi, const Tolerance& tol)
    : SkewingMechanism(tol), pi_(std::move(pi)) {
  if (!pi_.pi) throw ParameterError("skew-symmetric: missing skewing function");
  if (!pi_.log_pi) {
    pi_.log_pi = [f = pi_.pi](double y) { return std::log(f(y)); };
  }
  identity_ = true;
  constexpr int kGrid = 1001;
  for (int i = 0; i < kGrid; ++i) {
    const double y = -10.0 + 20.0 * i / (kGrid - 1);
    const double v = pi_.pi(y);
    const double mirrored = pi_.pi(-y);
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ParameterError("skew-symmetric: pi must take values in [0,1]");
    }
    if (std::abs(mirrored - (1.0 - v)) > 1e-12) {
      throw ParameterError("skew-symmetric: pi(-y) = 1 - pi(y) violated at y = " +
                           std::to_string(y));
    }
    if (std::abs(v - 0.5) > 1e-15) identity_ = false;
  }
  guess_log_cdf_.resize(kGuessPoints);
  guess_log_sf_.resize(kGuessPoints);
  for (int k = 0; k < kGuessPoints; ++k) {
    const UnitPoint pt = UnitPoint::from_base(kGuessLo + kGuessStep * k);
    guess_log_cdf_[k] = log_cdf(pt).value();
    guess_log_sf_[k] = log_sf(pt).value();
  }
}

double SkewSymmetric::log_p(const UnitPoint& pt) const {
  return kLn2 + pi_.log_pi(pt.z());
}

double SkewSymmetric::log_outer_mass(double z, bool upper) const {
  const double direction = upper ? 1.0 : -1.0;
  const double dist = std::abs(z);
  double ref = pi_.log_pi(z);
  if (!std::isfinite(ref)) ref = 0.0;
  const double scale = std::max(1.0, dist);
  // t = z + direction * u, and phi(t) = phi(z) exp(-|z| u - u^2 / 2).
  // pi itself is cheaper than its log and safe while pi(z) is not tiny.
  const bool direct = ref > kDirectPiFloor;
  const double inv_pi = direct ? std::exp(-ref) : 0.0;
  const auto integrand = [&](double w) {
    const double u = w / scale;
    const double t = z + direction * u;
    if (direct) return std::exp(-dist * u - 0.5 * u * u) * pi_.pi(t) * inv_pi;
    return std::exp(-dist * u - 0.5 * u * u + pi_.log_pi(t) - ref);
  };
  const double integral =
      numcore::integrate(integrand, 0.0, kInf, kTailQuadrature) / scale;
  if (!(integral > 0.0)) return -kInf;
  return std::min(0.0, kLn2 + numcore::log_normal_pdf(z) + ref + std::log(integral));
}

LogProb SkewSymmetric::log_cdf(const UnitPoint& pt) const {
  const double z = pt.z();
  if (z <= 0.0) return LogProb(log_outer_mass(z, false));
  return LogProb(numcore::log1m_exp(log_outer_mass(z, true)));
}

LogProb SkewSymmetric::log_sf(const UnitPoint& pt) const {
  const double z = pt.z();
  if (z >= 0.0) return LogProb(log_outer_mass(z, true));
  return LogProb(numcore::log1m_exp(log_outer_mass(z, false)));
}

UnitPoint SkewSymmetric::quantile_point(double q) const {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("quantile_P: q must lie in (0,1)");
  double guess = q <= 0.5 ? interpolate_z(guess_log_cdf_, std::log(q), true)
                          : interpolate_z(guess_log_sf_, std::log1p(-q), false);
  if (!std::isfinite(guess)) guess = numcore::normal_quantile(q);
  // Non-owning composed view of this mechanism.
  const SkewedDistribution view(MechanismPtr(std::shared_ptr<void>{}, this));
  return UnitPoint::from_base(quantile_by_inversion(view, q, guess, tolerance()));
}

std::shared_ptr<const SkewSymmetric> make_azzalini(double alpha, const Tolerance& tol) {
  return std::make_shared<SkewSymmetric>(azzalini_pi(alpha), tol);
}

}  // namespace skewlab
