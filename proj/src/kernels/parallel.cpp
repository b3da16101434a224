#include <exception>
#include <mutex>

#include "kernel_ops.hpp"

namespace skewlab::kernels {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw DomainError("kernels: input and output spans differ in size");
}

// Runs body(i) for i in [0, n) across threads; the first exception thrown
// by any iteration is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::exception_ptr failure;
  std::mutex guard;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

void evaluate(const ContinuousDistribution& dist, Quantity what,
              std::span<const double> in, std::span<double> out) {
  require_same_size(in.size(), out.size());
  parallel_for(in.size(), [&](std::size_t i) { out[i] = detail::apply(dist, what, in[i]); });
}

void sample_inversion(const ContinuousDistribution& dist, RngState& rng,
                      std::span<double> out) {
  const std::uint64_t first = rng.advance(out.size());
  const RngState& stream = rng;
  parallel_for(out.size(), [&](std::size_t i) {
    out[i] = dist.quantile(stream.unit_at(first + i));
  });
}

void sample_flip(const SkewingFunction& pi, RngState& rng, std::span<double> out) {
  const std::uint64_t first = rng.advance(2 * out.size());
  const RngState& stream = rng;
  parallel_for(out.size(),
               [&](std::size_t i) { out[i] = detail::flip_draw(pi, stream, first, i); });
}

void log_tail_masses(const ContinuousDistribution& dist, std::span<const double> ys,
                     std::span<double> out) {
  require_same_size(ys.size(), out.size());
  parallel_for(ys.size(),
               [&](std::size_t i) { out[i] = log_tail_mass(dist, ys[i]).value(); });
}

}  // namespace skewlab::kernels
