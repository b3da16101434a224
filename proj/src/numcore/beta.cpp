#include <algorithm>
#include <cmath>
#include <string>

#include "skewlab/numcore.hpp"

namespace skewlab::numcore {

namespace {

double lgamma_positive(double a) {
  int sign = 0;
  return ::lgamma_r(a, &sign);
}

void require_shape(double a, double b, const char* fn) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError(std::string(fn) + ": shape parameters must be positive");
  }
}

// Continued fraction for I_x(a,b) (Numerical Recipes "betacf"), valid and
// fast for x < (a+1)/(a+b+2).
double beta_continued_fraction(double a, double b, double x) {
  constexpr double fpmin = 1e-300;
  constexpr double eps = 1e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 1000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) return h;
  }
  throw ConvergenceError("reg_inc_beta: continued fraction did not converge", h,
                         kInf);
}

double log_inc_beta_direct(double log_x, double log_1mx, double a, double b) {
  const double log_front =
      a * log_x + b * log_1mx -
      (lgamma_positive(a) + lgamma_positive(b) - lgamma_positive(a + b)) - std::log(a);
  return log_front + std::log(beta_continued_fraction(a, b, std::exp(log_x)));
}

}  // namespace

double log_beta(double a, double b) {
  require_shape(a, b, "log_beta");
  return lgamma_positive(a) + lgamma_positive(b) - lgamma_positive(a + b);
}

double log_reg_inc_beta(double log_x, double log_1mx, double a, double b) {
  require_shape(a, b, "log_reg_inc_beta");
  if (std::isnan(log_x) || std::isnan(log_1mx) || log_x > 0.0 || log_1mx > 0.0) {
    throw DomainError("log_reg_inc_beta: need ln x <= 0 and ln(1-x) <= 0");
  }
  if (log_x == -kInf) return -kInf;
  if (log_1mx == -kInf) return 0.0;
  const double x = std::exp(log_x);
  if (x <= (a + 1.0) / (a + b + 2.0)) return log_inc_beta_direct(log_x, log_1mx, a, b);
  return log1m_exp(std::min(0.0, log_inc_beta_direct(log_1mx, log_x, b, a)));
}

double reg_inc_beta(double x, double a, double b) {
  require_shape(a, b, "reg_inc_beta");
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("reg_inc_beta: x must lie in [0,1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  return std::exp(log_reg_inc_beta(std::log(x), std::log1p(-x), a, b));
}

BetaQuantile inv_reg_inc_beta_split(double q, double a, double b,
                                    const Tolerance& tol) {
  require_shape(a, b, "inv_reg_inc_beta");
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("inv_reg_inc_beta: q must lie in (0,1)");
  }
  // Solve on the side holding at most half the mass: ln I_x(a,b) = ln q, or
  // ln I_{1-x}(b,a) = ln(1-q), with t = ln x (resp. ln(1-x)) as the unknown.
  const bool lower = q <= 0.5;
  const double sa = lower ? a : b;
  const double sb = lower ? b : a;
  const double target = lower ? std::log(q) : std::log1p(-q);
  auto residual = [&](double t) {
    return log_reg_inc_beta(t, log1m_exp(t), sa, sb) - target;
  };
  double t_lo = -64.0;
  while (residual(t_lo) > 0.0) {
    t_lo *= 2.0;
    if (t_lo < -1e7) throw BracketingError("inv_reg_inc_beta: q too small");
  }
  const double t = find_root(residual, t_lo, 0.0, tol);
  const double small = std::exp(t);
  const double large = -std::expm1(t);
  return lower ? BetaQuantile{small, large} : BetaQuantile{large, small};
}

double inv_reg_inc_beta(double q, double a, double b, const Tolerance& tol) {
  return inv_reg_inc_beta_split(q, a, b, tol).x;
}

}  // namespace skewlab::numcore
