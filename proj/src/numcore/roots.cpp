#include <cmath>
#include <limits>
#include <utility>

#include "skewlab/numcore.hpp"

namespace skewlab::numcore {

// Brent-Dekker iteration: every step is either an interpolation step that
// lands strictly inside the current bracket or a bisection.
double find_root(const ScalarFn& fn, double lo, double hi, const Tolerance& tol) {
  tol.validate();
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo <= hi)) {
    throw DomainError("find_root: need finite lo <= hi");
  }
  double a = lo;
  double b = hi;
  double fa = fn(a);
  double fb = fn(b);
  if (std::isnan(fa) || std::isnan(fb)) {
    throw DomainError("find_root: function is NaN at a bracket end");
  }
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw BracketingError("find_root: no sign change on [lo, hi]");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();

  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int iter = 0; iter < tol.max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double width_tol = 0.5 * std::max(tol.abs_tol, 4.0 * eps * std::abs(b));
    const double half = 0.5 * (c - b);
    if (std::abs(fb) <= tol.abs_tol || std::abs(half) <= width_tol || fb == 0.0) {
      return b;
    }
    if (std::abs(e) >= width_tol && std::abs(fa) > std::abs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * half * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * half * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      } else {
        p = -p;
      }
      if (2.0 * p < std::min(3.0 * half * q - std::abs(width_tol * q),
                             std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = half;
        e = d;
      }
    } else {
      d = half;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > width_tol ? d : (half > 0.0 ? width_tol : -width_tol);
    fb = fn(b);
    if (std::isnan(fb)) throw DomainError("find_root: function returned NaN");
  }
  throw ConvergenceError("find_root: iteration budget exhausted", b,
                         std::abs(c - b));
}

}  // namespace skewlab::numcore
