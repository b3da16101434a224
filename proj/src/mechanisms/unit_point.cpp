#include <cmath>

#include "skewlab/mechanisms.hpp"

namespace skewlab {

namespace {

void require_open_unit(double v, const char* what) {
  if (!(v > 0.0 && v < 1.0)) {
    throw DomainError(std::string(what) + " must lie in the open interval (0,1)");
  }
}

}  // namespace

UnitPoint UnitPoint::from_base(double z) {
  if (!std::isfinite(z)) throw DomainError("UnitPoint: base coordinate must be finite");
  UnitPoint pt;
  pt.source_ = Source::Base;
  pt.z_ = z;
  return pt;
}

UnitPoint UnitPoint::from_probability(double x) {
  require_open_unit(x, "UnitPoint: x");
  UnitPoint pt;
  pt.source_ = Source::Probability;
  pt.x_ = x;
  return pt;
}

UnitPoint UnitPoint::from_complement(double complement) {
  require_open_unit(complement, "UnitPoint: 1 - x");
  UnitPoint pt;
  pt.source_ = Source::Complement;
  pt.complement_ = complement;
  return pt;
}

double UnitPoint::z() const {
  if (std::isnan(z_)) {
    z_ = source_ == Source::Probability ? numcore::normal_quantile(x_)
                                        : -numcore::normal_quantile(complement_);
  }
  return z_;
}

double UnitPoint::x() const {
  if (std::isnan(x_)) {
    x_ = source_ == Source::Base ? numcore::normal_cdf(z_) : 1.0 - complement_;
  }
  return x_;
}

double UnitPoint::complement() const {
  if (std::isnan(complement_)) {
    complement_ = source_ == Source::Base ? numcore::normal_cdf(-z_) : 1.0 - x_;
  }
  return complement_;
}

double UnitPoint::log_x() const {
  if (std::isnan(log_x_)) {
    switch (source_) {
      case Source::Base:
        log_x_ = numcore::log_normal_cdf(z_).value();
        break;
      case Source::Probability:
        log_x_ = std::log(x_);
        break;
      case Source::Complement:
        log_x_ = std::log1p(-complement_);
        break;
    }
  }
  return log_x_;
}

double UnitPoint::log_complement() const {
  if (std::isnan(log_complement_)) {
    switch (source_) {
      case Source::Base:
        log_complement_ = numcore::log_normal_sf(z_).value();
        break;
      case Source::Probability:
        log_complement_ = std::log1p(-x_);
        break;
      case Source::Complement:
        log_complement_ = std::log(complement_);
        break;
    }
  }
  return log_complement_;
}

}  // namespace skewlab
