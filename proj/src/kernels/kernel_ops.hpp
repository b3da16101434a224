#pragma once

// Per-element operations shared by the parallel and serial kernels.

#include <cstdint>

#include "skewlab/kernels.hpp"

namespace skewlab::kernels::detail {

inline double apply(const ContinuousDistribution& dist, Quantity what, double v) {
  switch (what) {
    case Quantity::Pdf:
      return dist.pdf(v);
    case Quantity::LogPdf:
      return dist.log_pdf(v);
    case Quantity::Cdf:
      return dist.cdf(v);
    case Quantity::LogCdf:
      return dist.log_cdf(v).value();
    case Quantity::LogSf:
      return dist.log_sf(v).value();
    case Quantity::Quantile:
      return dist.quantile(v);
  }
  return 0.0;
}

inline double flip_draw(const SkewingFunction& pi, const RngState& rng,
                        std::uint64_t first, std::uint64_t i) {
  const double x = numcore::normal_quantile(rng.unit_at(first + 2 * i));
  const double v = rng.unit_at(first + 2 * i + 1);
  return v <= pi.pi(x) ? x : -x;
}

}  // namespace skewlab::kernels::detail
