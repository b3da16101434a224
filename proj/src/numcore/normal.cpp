#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "skewlab/numcore.hpp"

namespace skewlab::numcore {

namespace {

void require_finite(double y, const char* fn) {
  if (!std::isfinite(y)) {
    throw DomainError(std::string(fn) + ": argument must be finite");
  }
}

// Continued fraction for the Mills ratio Phi(-y)/phi(y), evaluated with the
// modified Lentz algorithm. Only called for y > 8, where it converges in a
// few dozen terms.
double mills_ratio(double y) {
  constexpr double tiny = 1e-300;
  double f = y;
  double c = f;
  double d = 0.0;
  for (int j = 1; j < 500; ++j) {
    const double a = j;
    d = y + a * d;
    if (d == 0.0) d = tiny;
    c = y + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 / f;
}

template <std::size_t N>
double horner(const std::array<double, N>& c, double x) {
  double acc = c[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) acc = acc * x + c[i];
  return acc;
}

constexpr std::array<double, 8> kA{
    3.387132872796366608,  133.14166789178437745, 1971.5909503065514427,
    13731.693765509461125, 45921.953931549871457, 67265.770927008700853,
    33430.575583588128105, 2509.0809287301226727};
constexpr std::array<double, 8> kB{
    1.0,                   42.313330701600911252, 687.1870074920579083,
    5394.1960214247511077, 21213.794301586595867, 39307.89580009271061,
    28729.085735721942674, 5226.495278852545925};
constexpr std::array<double, 8> kC{
    1.42343711074968357734,  4.6303378461565452959,
    5.7694972214606914055,   3.64784832476320460504,
    1.27045825245236838258,  0.24178072517745061177,
    0.0227238449892691845833, 7.7454501427834140764e-4};
constexpr std::array<double, 8> kD{
    1.0,                      2.05319162663775882187,
    1.6763848301838038494,    0.68976733498510000455,
    0.14810397642748007459,   0.0151986665636164571966,
    5.475938084995344946e-4,  1.05075007164441684324e-9};
constexpr std::array<double, 8> kE{
    6.6579046435011037772,    5.4637849111641143699,
    1.7848265399172913358,    0.29656057182850489123,
    0.026532189526576123093,  0.0012426609473880784386,
    2.71155556874348757815e-5, 2.01033439929228813265e-7};
constexpr std::array<double, 8> kF{
    1.0,                       0.59983220655588793769,
    0.13692988092273580531,    0.0148753612908506148525,
    7.868691311456132591e-4,   1.8463183175100546818e-5,
    1.4215117583164458887e-7,  2.04426310338993978564e-15};

}  // namespace

void Tolerance::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iter < 1) {
    throw ParameterError("Tolerance: need abs_tol > 0, rel_tol > 0, max_iter >= 1");
  }
}

LogProb::LogProb(double value) : value_(value) {
  if (std::isnan(value) || value > 0.0) {
    throw DomainError("LogProb: log-probability must be <= 0, got " +
                      std::to_string(value));
  }
}

double log_sum_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (a == -kInf) return -kInf;
  return a + std::log1p(std::exp(b - a));
}

double log1m_exp(double a) {
  if (a > 0.0) throw DomainError("log1m_exp: argument must be <= 0");
  if (a > -kLn2) return std::log(-std::expm1(a));
  return std::log1p(-std::exp(a));
}

double normal_pdf(double y) {
  require_finite(y, "normal_pdf");
  return kInvSqrt2Pi * std::exp(-0.5 * y * y);
}

double log_normal_pdf(double y) {
  require_finite(y, "log_normal_pdf");
  return -0.5 * y * y - kLnSqrt2Pi;
}

double normal_cdf(double y) {
  require_finite(y, "normal_cdf");
  return 0.5 * std::erfc(-y / std::numbers::sqrt2);
}

LogProb log_normal_sf(double y) {
  require_finite(y, "log_normal_sf");
  if (y > 8.0) {
    return LogProb(-0.5 * y * y - kLnSqrt2Pi + std::log(mills_ratio(y)));
  }
  if (y > 0.0) {
    return LogProb(std::log(0.5 * std::erfc(y / std::numbers::sqrt2)));
  }
  // The lower tail mass Phi(y) <= 1/2 is small here; log1p keeps it exact.
  return LogProb(std::log1p(-0.5 * std::erfc(-y / std::numbers::sqrt2)));
}

LogProb log_normal_cdf(double y) {
  require_finite(y, "log_normal_cdf");
  return log_normal_sf(-y);
}

double normal_quantile(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("normal_quantile: q must lie in (0,1)");
  }
  const double centred = q - 0.5;
  if (std::abs(centred) <= 0.425) {
    const double r = 0.180625 - centred * centred;
    return centred * horner(kA, r) / horner(kB, r);
  }
  double r = std::sqrt(-std::log(std::min(q, 1.0 - q)));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = horner(kC, r) / horner(kD, r);
  } else {
    r -= 5.0;
    value = horner(kE, r) / horner(kF, r);
  }
  return centred < 0.0 ? -value : value;
}

}  // namespace skewlab::numcore
