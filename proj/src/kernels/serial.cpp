#include "kernel_ops.hpp"

namespace skewlab::kernels::serial {

void evaluate(const ContinuousDistribution& dist, Quantity what,
              std::span<const double> in, std::span<double> out) {
  if (in.size() != out.size()) {
    throw DomainError("kernels: input and output spans differ in size");
  }
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = detail::apply(dist, what, in[i]);
}

void sample_inversion(const ContinuousDistribution& dist, RngState& rng,
                      std::span<double> out) {
  for (double& v : out) v = dist.sample(rng);
}

void sample_flip(const SkewingFunction& pi, RngState& rng, std::span<double> out) {
  const std::uint64_t first = rng.advance(2 * out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = detail::flip_draw(pi, rng, first, i);
  }
}

void log_tail_masses(const ContinuousDistribution& dist, std::span<const double> ys,
                     std::span<double> out) {
  if (ys.size() != out.size()) {
    throw DomainError("kernels: input and output spans differ in size");
  }
  for (std::size_t i = 0; i < ys.size(); ++i) out[i] = log_tail_mass(dist, ys[i]).value();
}

}  // namespace skewlab::kernels::serial
