#include <cmath>
#include <memory>

#include "skewlab/kernels.hpp"
#include "skewlab/mechanisms.hpp"

namespace skewlab {

namespace {

// Non-owning view of S = P o Phi, used where a mechanism needs its own
// composed law (quantile inversion) without allocating a SkewedDistribution.
class ComposedView final : public ContinuousDistribution {
 public:
  explicit ComposedView(const SkewingMechanism& mech) : mech_(mech) {}
  double log_pdf(double y) const override {
    return numcore::log_normal_pdf(y) + mech_.log_p(UnitPoint::from_base(y));
  }
  LogProb log_cdf(double y) const override {
    return mech_.log_cdf(UnitPoint::from_base(y));
  }
  LogProb log_sf(double y) const override {
    return mech_.log_sf(UnitPoint::from_base(y));
  }
  std::string describe() const override { return mech_.describe(); }

 private:
  const SkewingMechanism& mech_;
};

}  // namespace

SkewingMechanism::SkewingMechanism(const Tolerance& tol) : tol_(tol) {
  tol_.validate();
}

UnitPoint SkewingMechanism::quantile_point(double q) const {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("quantile_P: q must lie in (0,1)");
  const ComposedView view(*this);
  return UnitPoint::from_base(
      quantile_by_inversion(view, q, numcore::normal_quantile(q), tol_));
}

double SkewingMechanism::p(double x) const {
  return std::exp(log_p(UnitPoint::from_probability(x)));
}

double SkewingMechanism::cdf_P(double x) const {
  if (x == 0.0 || x == 1.0) {
    if (!defined_at_endpoints()) {
      throw DomainError("cdf_P: mechanism is only defined on (0,1)");
    }
    return x;
  }
  const UnitPoint pt = UnitPoint::from_probability(x);
  const double lc = log_cdf(pt).value();
  if (lc < -numcore::kLn2) return std::exp(lc);
  return -std::expm1(log_sf(pt).value());
}

SkewedDistribution::SkewedDistribution(MechanismPtr mechanism)
    : mechanism_(std::move(mechanism)) {
  if (!mechanism_) throw ParameterError("SkewedDistribution: null mechanism");
}

double SkewedDistribution::log_pdf(double y) const {
  return numcore::log_normal_pdf(y) + mechanism_->log_p(UnitPoint::from_base(y));
}

LogProb SkewedDistribution::log_cdf(double y) const {
  return mechanism_->log_cdf(UnitPoint::from_base(y));
}

LogProb SkewedDistribution::log_sf(double y) const {
  return mechanism_->log_sf(UnitPoint::from_base(y));
}

double SkewedDistribution::quantile(double q) const {
  return mechanism_->quantile_point(q).z();
}

std::string SkewedDistribution::describe() const {
  return "compose(standard-normal, " + mechanism_->describe() + ")";
}

SkewedDistribution compose(const StandardNormal&, MechanismPtr mechanism) {
  return SkewedDistribution(std::move(mechanism));
}

ExtractedMechanism::ExtractedMechanism(
    std::shared_ptr<const ContinuousDistribution> target)
    : target_(std::move(target)) {
  if (!target_) throw ParameterError("extract_mechanism: null distribution");
  identity_ = true;
  for (int i = 1; i <= 1001; ++i) {
    const UnitPoint pt = UnitPoint::from_probability(i / 1002.0);
    if (std::abs(log_p(pt)) > 1e-12) {
      identity_ = false;
      break;
    }
  }
}

double ExtractedMechanism::log_p(const UnitPoint& pt) const {
  const double z = pt.z();
  return target_->log_pdf(z) - numcore::log_normal_pdf(z);
}

LogProb ExtractedMechanism::log_cdf(const UnitPoint& pt) const {
  return target_->log_cdf(pt.z());
}

LogProb ExtractedMechanism::log_sf(const UnitPoint& pt) const {
  return target_->log_sf(pt.z());
}

UnitPoint ExtractedMechanism::quantile_point(double q) const {
  return UnitPoint::from_base(target_->quantile(q));
}

std::string ExtractedMechanism::describe() const {
  return "extracted(" + target_->describe() + ")";
}

MechanismPtr extract_mechanism(std::shared_ptr<const ContinuousDistribution> target,
                               const StandardNormal&) {
  return std::make_shared<ExtractedMechanism>(std::move(target));
}

std::vector<double> sample_skewed(const SkewedDistribution& dist, RngState& rng,
                                  std::size_t n) {
  std::vector<double> out(n);
  kernels::sample_inversion(dist, rng, out);
  return out;
}

std::vector<double> sample_flip(const SkewingFunction& pi, RngState& rng,
                                std::size_t n) {
  std::vector<double> out(n);
  kernels::sample_flip(pi, rng, out);
  return out;
}

}  // namespace skewlab
