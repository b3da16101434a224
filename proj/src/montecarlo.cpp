#include "skewlab/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace skewlab {

namespace {

double numerical_mode(const ContinuousDistribution& dist) {
  double best_y = 0.0;
  double best = -numcore::kInf;
  for (int i = -800; i <= 800; ++i) {
    const double y = i / 100.0;
    const double v = dist.log_pdf(y);
    if (v > best) {
      best = v;
      best_y = y;
    }
  }
  return best_y;
}

}  // namespace

double oracle_cdf(const ContinuousDistribution& dist, double y, const Tolerance& tol) {
  if (!std::isfinite(y)) throw DomainError("oracle_cdf: y must be finite");
  const std::array<double, 2> knots{0.0, numerical_mode(dist)};
  return numcore::integrate([&dist](double t) { return dist.pdf(t); }, -numcore::kInf,
                            y, knots, tol);
}

KsResult ks_test(std::span<const double> samples,
                 const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_test: empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto count = static_cast<std::ptrdiff_t>(sorted.size());
  std::vector<double> f(sorted.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t i = 0; i < count; ++i) f[i] = cdf(sorted[i]);
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double i_d = static_cast<double>(i);
    d = std::max({d, (i_d + 1.0) / n - f[i], f[i] - i_d / n});
  }
  return KsResult{d, sorted.size(), kKsCritical1pct / std::sqrt(n)};
}

KsResult ks_two_sample(std::span<const double> first, std::span<const double> second) {
  if (first.empty() || second.empty()) throw DomainError("ks_two_sample: empty sample");
  std::vector<double> a(first.begin(), first.end());
  std::vector<double> b(second.begin(), second.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return KsResult{d, a.size(), kKsCritical1pct * std::sqrt((na + nb) / (na * nb))};
}

double moment_estimate(std::span<const double> samples, int k) {
  if (k < 1 || k > 4) throw DomainError("moment_estimate: order must be 1..4");
  if (samples.empty()) throw DomainError("moment_estimate: empty sample");
  double sum = 0.0;
  for (const double v : samples) sum += std::pow(v, k);
  return sum / static_cast<double>(samples.size());
}

}  // namespace skewlab
