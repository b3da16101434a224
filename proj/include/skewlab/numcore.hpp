#pragma once

// Special functions and numerical kernels shared by every other module:
// the standard normal with log-accurate tails, beta functions, bracketed
// root finding and adaptive Gauss-Kronrod quadrature.

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace skewlab {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BracketingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an iterative scheme runs out of budget. Carries the best
/// estimate reached so callers can decide whether it is usable.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double partial, double error)
      : std::runtime_error(what), partial_(partial), error_(error) {}
  double partial_estimate() const noexcept { return partial_; }
  double error_estimate() const noexcept { return error_; }

 private:
  double partial_;
  double error_;
};

namespace numcore {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kEps = std::numeric_limits<double>::epsilon();
inline constexpr double kLn2 = 0.69314718055994530942;
inline constexpr double kLnSqrt2Pi = 0.91893853320467274178;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;

struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_iter = 200;

  /// Throws ParameterError unless abs_tol > 0, rel_tol > 0, max_iter >= 1.
  void validate() const;
};

/// Natural log of a probability. Always <= 0; -inf stands for an exact zero.
class LogProb {
 public:
  constexpr LogProb() = default;
  explicit LogProb(double value);

  static LogProb zero() { return LogProb(-kInf); }
  static LogProb one() { return LogProb(0.0); }

  double value() const noexcept { return value_; }
  double prob() const { return std::exp(value_); }
  bool is_zero() const noexcept { return value_ == -kInf; }

 private:
  double value_ = 0.0;
};

// -- log-space helpers -------------------------------------------------------

/// ln(e^a + e^b) without overflow or needless underflow.
double log_sum_exp(double a, double b);
/// ln(1 - e^a) for a <= 0, accurate on both sides of a = -ln 2.
double log1m_exp(double a);

// -- standard normal ---------------------------------------------------------

double normal_pdf(double y);
double log_normal_pdf(double y);
double normal_cdf(double y);
/// ln Phi(y); equals log_normal_sf(-y).
LogProb log_normal_cdf(double y);
/// ln(1 - Phi(y)) computed as ln Phi(-y). Uses a continued fraction for the
/// Mills ratio once y > 8, so the result stays finite far past the point
/// where 1 - Phi(y) underflows.
LogProb log_normal_sf(double y);
/// Inverse of normal_cdf on (0,1) (Wichura's AS 241 rational approximations).
double normal_quantile(double q);

// -- beta functions ----------------------------------------------------------

double log_beta(double a, double b);
/// Regularized incomplete beta I_x(a, b).
double reg_inc_beta(double x, double a, double b);
/// ln I_x(a, b) with x given through ln x and ln(1-x), so that x or 1-x can
/// sit far below the smallest normal double.
double log_reg_inc_beta(double log_x, double log_1mx, double a, double b);

struct BetaQuantile {
  double x;
  double complement;  // 1 - x, carried separately so it keeps its digits
};
/// Inverse of I_x(a, b) in q. The root is found in ln x (or ln(1-x) when
/// q > 1/2) against ln I, so tolerances act relatively on the smaller side.
BetaQuantile inv_reg_inc_beta_split(double q, double a, double b,
                                    const Tolerance& tol = Tolerance{1e-14, 1e-14, 400});
double inv_reg_inc_beta(double q, double a, double b,
                        const Tolerance& tol = Tolerance{1e-14, 1e-14, 400});

// -- root finding ------------------------------------------------------------

using ScalarFn = std::function<double(double)>;

/// Bracketed root finder: bisection with secant and inverse-quadratic steps,
/// never leaving [lo, hi]. Stops once |fn(r)| <= abs_tol or the bracket is
/// narrower than abs_tol (widened to a few ulps of |r| for large roots).
double find_root(const ScalarFn& fn, double lo, double hi,
                 const Tolerance& tol = {});

// -- quadrature --------------------------------------------------------------

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
  int evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7/15) quadrature with global bisection of the
/// worst interval. Either limit may be infinite; half-lines are mapped onto
/// (0,1] by x = a + (1-t)/t and the real line is split at 0. Converges when
/// the summed error estimate is below max(abs_tol, rel_tol*|value|); at most
/// max_iter subdivisions are spent before ConvergenceError is raised.
QuadratureResult integrate_detailed(const ScalarFn& fn, double lo, double hi,
                                    const Tolerance& tol = {});
double integrate(const ScalarFn& fn, double lo, double hi,
                 const Tolerance& tol = {});
/// Same, but splits the range at every breakpoint lying strictly inside it.
double integrate(const ScalarFn& fn, double lo, double hi,
                 std::span<const double> breakpoints,
                 const Tolerance& tol = {});

}  // namespace numcore
}  // namespace skewlab
