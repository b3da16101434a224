#pragma once

// Batch kernels over grids and sample indices. The default versions spread
// the loop over OpenMP threads; kernels::serial holds the plain-loop
// reference used by the tests. Each output element depends only on its own
// input (or RNG draw index), so both produce bit-identical results.

#include <span>

#include "skewlab/distributions.hpp"
#include "skewlab/mechanisms.hpp"
#include "skewlab/rng.hpp"

namespace skewlab::kernels {

enum class Quantity { Pdf, LogPdf, Cdf, LogCdf, LogSf, Quantile };

void evaluate(const ContinuousDistribution& dist, Quantity what,
              std::span<const double> in, std::span<double> out);
/// out[i] = dist.quantile(U_i), U_i the i-th reserved draw of rng.
void sample_inversion(const ContinuousDistribution& dist, RngState& rng,
                      std::span<double> out);
/// Two draws per output: X = Phi^{-1}(U), then a flip of X unless V <= pi(X).
void sample_flip(const SkewingFunction& pi, RngState& rng, std::span<double> out);
void log_tail_masses(const ContinuousDistribution& dist, std::span<const double> ys,
                     std::span<double> out);

namespace serial {

void evaluate(const ContinuousDistribution& dist, Quantity what,
              std::span<const double> in, std::span<double> out);
void sample_inversion(const ContinuousDistribution& dist, RngState& rng,
                      std::span<double> out);
void sample_flip(const SkewingFunction& pi, RngState& rng, std::span<double> out);
void log_tail_masses(const ContinuousDistribution& dist, std::span<const double> ys,
                     std::span<double> out);

}  // namespace serial

}  // namespace skewlab::kernels
