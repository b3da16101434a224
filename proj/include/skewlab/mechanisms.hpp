#pragma once

// Skewing mechanisms: distributions P on (0,1) that turn the standard normal
// F into S = P o F with density s(y) = phi(y) * p(Phi(y)).

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/distributions.hpp"

namespace skewlab {

/// A point x of (0,1) together with its base coordinate z = Phi^{-1}(x).
/// Whatever coordinate the point was built from is exact; the others are
/// derived on first use in their log-accurate form, so a point built from z
/// at z = 30 still knows ln(1-x) = ln Phi(-30).
class UnitPoint {
 public:
  static UnitPoint from_base(double z);
  static UnitPoint from_probability(double x);
  static UnitPoint from_complement(double complement);

  double z() const;
  double x() const;
  double complement() const;
  double log_x() const;
  double log_complement() const;

 private:
  UnitPoint() = default;
  enum class Source { Base, Probability, Complement };
  Source source_ = Source::Base;
  mutable double z_ = kUnset;
  mutable double x_ = kUnset;
  mutable double complement_ = kUnset;
  mutable double log_x_ = kUnset;
  mutable double log_complement_ = kUnset;
  static constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
};

class SkewingMechanism {
 public:
  virtual ~SkewingMechanism() = default;

  virtual double log_p(const UnitPoint& point) const = 0;
  virtual LogProb log_cdf(const UnitPoint& point) const = 0;
  virtual LogProb log_sf(const UnitPoint& point) const = 0;
  /// Quantile of P returned as a point, so compose can read z directly. The
  /// default root-finds the composed cdf on the base scale.
  virtual UnitPoint quantile_point(double q) const;
  /// Closed-form sup of p over (0,1) when the family has one.
  virtual std::optional<double> analytic_sup() const { return std::nullopt; }
  /// Whether the parameters make S a normal law (p == 1, or a pure rescaling
  /// for two-piece with a == b).
  virtual bool is_identity() const = 0;
  virtual std::string describe() const = 0;
  /// Extracted mechanisms are only defined on the open interval.
  virtual bool defined_at_endpoints() const { return true; }

  double p(double x) const;
  double log_p(double x) const { return log_p(UnitPoint::from_probability(x)); }
  double cdf_P(double x) const;
  double quantile_P(double q) const { return quantile_point(q).x(); }

  const Tolerance& tolerance() const noexcept { return tol_; }

 protected:
  explicit SkewingMechanism(const Tolerance& tol = {});

 private:
  Tolerance tol_;
};

using MechanismPtr = std::shared_ptr<const SkewingMechanism>;

/// p == 1: S is the standard normal itself.
class IdentityMechanism final : public SkewingMechanism {
 public:
  double log_p(const UnitPoint&) const override { return 0.0; }
  LogProb log_cdf(const UnitPoint& pt) const override { return LogProb(pt.log_x()); }
  LogProb log_sf(const UnitPoint& pt) const override {
    return LogProb(pt.log_complement());
  }
  UnitPoint quantile_point(double q) const override {
    return UnitPoint::from_probability(q);
  }
  std::optional<double> analytic_sup() const override { return 1.0; }
  bool is_identity() const override { return true; }
  std::string describe() const override { return "identity"; }
};

/// The skewing function pi of a skew-symmetric construction.
struct SkewingFunction {
  std::function<double(double)> pi;
  std::function<double(double)> log_pi;
  std::string label;
};

SkewingFunction azzalini_pi(double alpha);
SkewingFunction logistic_pi(double lambda);
/// pi == 1/2: no skewing at all.
SkewingFunction half_pi();
/// pi(y) = 1{y > 0} (1/2 at the origin): folds all mass onto y > 0.
SkewingFunction positive_step_pi();

/// s(y) = 2 phi(y) pi(y) with pi(-y) = 1 - pi(y); p(x) = 2 pi(Phi^{-1}(x)).
/// The cdf has no closed form for general pi; both tails are integrated on
/// the half-line with phi(z) pi(z) factored out, which keeps ln S(z) and
/// ln(1 - S(z)) accurate deep into the tails.
class SkewSymmetric final : public SkewingMechanism {
 public:
  explicit SkewSymmetric(SkewingFunction pi, const Tolerance& tol = {});

  double log_p(const UnitPoint& pt) const override;
  LogProb log_cdf(const UnitPoint& pt) const override;
  LogProb log_sf(const UnitPoint& pt) const override;
  /// Inverts the composed cdf starting from a coarse table of it.
  UnitPoint quantile_point(double q) const override;
  std::optional<double> analytic_sup() const override { return 2.0; }
  bool is_identity() const override { return identity_; }
  std::string describe() const override { return "skew-symmetric(" + pi_.label + ")"; }

  const SkewingFunction& skewing_function() const noexcept { return pi_; }

 private:
  // ln of the mass above z (upper) or below it. Only used on the side
  // facing away from the origin, where the half-line integral is well scaled.
  double log_outer_mass(double z, bool upper) const;

  SkewingFunction pi_;
  bool identity_ = false;
  // ln S and ln(1 - S) at z = kGuessLo + k * kGuessStep.
  std::vector<double> guess_log_cdf_;
  std::vector<double> guess_log_sf_;
};

std::shared_ptr<const SkewSymmetric> make_azzalini(double alpha,
                                                   const Tolerance& tol = {});

/// p = Beta(psi1, psi2) density; cdf_P is the regularized incomplete beta.
class OrderStatistics final : public SkewingMechanism {
 public:
  OrderStatistics(double psi1, double psi2, const Tolerance& tol = {});

  double log_p(const UnitPoint& pt) const override;
  LogProb log_cdf(const UnitPoint& pt) const override;
  LogProb log_sf(const UnitPoint& pt) const override;
  UnitPoint quantile_point(double q) const override;
  /// Present when psi1 >= 1 and psi2 >= 1: the density at its mode.
  std::optional<double> analytic_sup() const override;
  bool is_identity() const override { return psi1_ == 1.0 && psi2_ == 1.0; }
  std::string describe() const override;

  double psi1() const noexcept { return psi1_; }
  double psi2() const noexcept { return psi2_; }

 private:
  double psi1_;
  double psi2_;
  double log_beta_;
};

/// p(x) = gamma / [x + gamma (1-x)]^2.
class MarshallOlkin final : public SkewingMechanism {
 public:
  explicit MarshallOlkin(double gamma);

  double log_p(const UnitPoint& pt) const override;
  LogProb log_cdf(const UnitPoint& pt) const override;
  LogProb log_sf(const UnitPoint& pt) const override;
  UnitPoint quantile_point(double q) const override;
  std::optional<double> analytic_sup() const override;
  bool is_identity() const override { return gamma_ == 1.0; }
  std::string describe() const override;

  double gamma() const noexcept { return gamma_; }

 private:
  double gamma_;
};

/// Marshall-Olkin mechanism cdf x / (gamma + (1 - gamma) x).
double mo_cdf_P(double gamma, double x);

/// s(y) = 2/(a+b) [phi(y/b) 1{y<0} + phi(y/a) 1{y>=0}]: scale b left of the
/// mode and a right of it.
class TwoPiece final : public SkewingMechanism {
 public:
  TwoPiece(double a, double b);
  /// {a, b} = {1 - gamma, 1 + gamma}, gamma in (-1, 1).
  static std::shared_ptr<const TwoPiece> epsilon_skew(double gamma);
  /// {a, b} = {1/gamma, gamma}, gamma > 0.
  static std::shared_ptr<const TwoPiece> inverse_scale(double gamma);

  double log_p(const UnitPoint& pt) const override;
  LogProb log_cdf(const UnitPoint& pt) const override;
  LogProb log_sf(const UnitPoint& pt) const override;
  UnitPoint quantile_point(double q) const override;
  /// Present only when max(a, b) <= 1; otherwise p blows up at an endpoint.
  std::optional<double> analytic_sup() const override;
  bool is_identity() const override { return a_ == b_; }
  std::string describe() const override;

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

 private:
  double a_;
  double b_;
};

/// Two-piece cdf: (2b/(a+b)) Phi(y/b) for y < 0 and
/// (b-a)/(a+b) + (2a/(a+b)) Phi(y/a) for y >= 0.
double twopiece_cdf(double a, double b, double y);

/// S = P o F for F = Phi.
class SkewedDistribution final : public ContinuousDistribution {
 public:
  explicit SkewedDistribution(MechanismPtr mechanism);

  double log_pdf(double y) const override;
  LogProb log_cdf(double y) const override;
  LogProb log_sf(double y) const override;
  double quantile(double q) const override;
  std::string describe() const override;

  const SkewingMechanism& mechanism() const noexcept { return *mechanism_; }
  const MechanismPtr& mechanism_ptr() const noexcept { return mechanism_; }

 private:
  MechanismPtr mechanism_;
};

SkewedDistribution compose(const StandardNormal& base, MechanismPtr mechanism);

/// The mechanism P with S = P o F for an arbitrary continuous S on the real
/// line: p(x) = s(F^{-1}(x)) / f(F^{-1}(x)), cdf_P(x) = S(F^{-1}(x)).
class ExtractedMechanism final : public SkewingMechanism {
 public:
  explicit ExtractedMechanism(std::shared_ptr<const ContinuousDistribution> target);

  double log_p(const UnitPoint& pt) const override;
  LogProb log_cdf(const UnitPoint& pt) const override;
  LogProb log_sf(const UnitPoint& pt) const override;
  UnitPoint quantile_point(double q) const override;
  bool is_identity() const override { return identity_; }
  std::string describe() const override;
  bool defined_at_endpoints() const override { return false; }

 private:
  std::shared_ptr<const ContinuousDistribution> target_;
  bool identity_ = false;
};

MechanismPtr extract_mechanism(std::shared_ptr<const ContinuousDistribution> target,
                               const StandardNormal& base);

/// Inversion sampler Y = F^{-1}(P^{-1}(U)); draws consume rng in order.
std::vector<double> sample_skewed(const SkewedDistribution& dist, RngState& rng,
                                  std::size_t n);
/// Exact skew-symmetric sampler: X ~ Phi, keep X when U <= pi(X), else -X.
std::vector<double> sample_flip(const SkewingFunction& pi, RngState& rng,
                                std::size_t n);

}  // namespace skewlab
