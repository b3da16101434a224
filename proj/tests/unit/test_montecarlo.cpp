#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "skewlab/catalog.hpp"
#include "skewlab/mechanisms.hpp"
#include "skewlab/montecarlo.hpp"

using namespace skewlab;

namespace {

SkewedDistribution composed(MechanismPtr m) { return SkewedDistribution(std::move(m)); }

double phi_cdf(double y) { return numcore::normal_cdf(y); }

}  // namespace

TEST(OracleCdf, Examples) {
  EXPECT_NEAR(oracle_cdf(StandardNormal{}, 0.0), 0.5, 1e-12);
  const auto mo = composed(std::make_shared<MarshallOlkin>(2.0));
  EXPECT_NEAR(oracle_cdf(mo, 0.0), 1.0 / 3.0, 1e-12);
  const auto tp = composed(TwoPiece::epsilon_skew(-0.5));
  EXPECT_NEAR(oracle_cdf(tp, 1.0), 0.6212611936796156, 1e-11);
  EXPECT_THROW(oracle_cdf(mo, numcore::kInf), DomainError);
}

TEST(OracleCdf, AgreesWithComposedCdf) {
  for (const auto& inst : shipped_instances()) {
    const auto s = composed(inst.mechanism);
    for (int i = 0; i < 25; ++i) {
      const double y = -5.0 + 10.0 * i / 24.0;
      EXPECT_NEAR(oracle_cdf(s, y), s.cdf(y), 1e-8) << inst.id << " y = " << y;
    }
  }
}

TEST(OracleCdf, ReportsNonConvergence) {
  const auto s = composed(make_azzalini(1.0));
  EXPECT_THROW(oracle_cdf(s, 2.0, Tolerance{1e-300, 1e-300, 1}), ConvergenceError);
}

TEST(Ks, QuantilePointsGiveSmallStatistic) {
  const std::size_t n = 999;
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = numcore::normal_quantile((i + 1.0) / (n + 1.0));
  }
  const auto r = ks_test(xs, phi_cdf);
  EXPECT_LE(r.statistic, 1.0 / (n + 1.0) + 1.0 / n);
  EXPECT_EQ(r.n, n);
  EXPECT_NEAR(r.critical_1pct, 1.6276 / std::sqrt(999.0), 1e-15);
  EXPECT_TRUE(r.passed());
}

TEST(Ks, IdentitySamplesPass) {
  RngState rng(42);
  const auto xs = sample_skewed(composed(std::make_shared<IdentityMechanism>()), rng, 100000);
  const auto r = ks_test(xs, phi_cdf);
  EXPECT_TRUE(r.passed()) << r.statistic;
  EXPECT_GE(r.statistic, 0.0);
  EXPECT_LE(r.statistic, 1.0);
}

TEST(Ks, WrongLawFails) {
  RngState rng(42);
  const auto xs = sample_skewed(composed(std::make_shared<IdentityMechanism>()), rng, 100000);
  const auto r = ks_test(xs, [](double y) { return mo_cdf_P(4.0, numcore::normal_cdf(y)); });
  EXPECT_FALSE(r.passed());
  EXPECT_GT(r.statistic, 0.29);
}

TEST(Ks, Deterministic) {
  const std::vector<double> xs = {0.3, -1.2, 2.0, 0.1};
  EXPECT_EQ(ks_test(xs, phi_cdf).statistic, ks_test(xs, phi_cdf).statistic);
  const std::vector<double> single = {0.0};
  EXPECT_NEAR(ks_test(single, phi_cdf).statistic, 0.5, 1e-15);
}

TEST(Ks, EmptyInput) {
  const std::vector<double> none;
  EXPECT_THROW(ks_test(none, phi_cdf), DomainError);
  const std::vector<double> one = {1.0};
  EXPECT_THROW(ks_two_sample(none, one), DomainError);
  EXPECT_THROW(ks_two_sample(one, none), DomainError);
}

TEST(Ks, TwoSample) {
  const std::vector<double> a = {1.0, 2.0, 3.0};
  const std::vector<double> b = {4.0, 5.0};
  EXPECT_EQ(ks_two_sample(a, b).statistic, 1.0);
  EXPECT_EQ(ks_two_sample(a, a).statistic, 0.0);
  const std::vector<double> c = {1.0, 2.0, 3.0, 4.0};
  const std::vector<double> d = {2.5};
  EXPECT_NEAR(ks_two_sample(c, d).statistic, 0.5, 1e-15);

  RngState r1(1);
  RngState r2(2);
  const auto az = composed(make_azzalini(3.0));
  const auto inv = sample_skewed(az, r1, 100000);
  const auto flip = sample_flip(azzalini_pi(3.0), r2, 100000);
  const auto same = ks_two_sample(inv, flip);
  EXPECT_TRUE(same.passed()) << same.statistic;
  EXPECT_NEAR(same.critical_1pct, 1.6276 * std::sqrt(2.0 / 100000.0), 1e-15);

  RngState r3(3);
  const auto other = sample_flip(azzalini_pi(-3.0), r3, 100000);
  EXPECT_FALSE(ks_two_sample(inv, other).passed());
}

TEST(Moments, IdentityLaw) {
  RngState rng(7);
  const std::size_t n = 1000000;
  const auto xs = sample_flip(half_pi(), rng, n);
  const double root_n = std::sqrt(static_cast<double>(n));
  EXPECT_NEAR(moment_estimate(xs, 1), 0.0, 4.0 / root_n);
  EXPECT_NEAR(moment_estimate(xs, 2), 1.0, 6.0 / root_n);
}

TEST(Moments, AzzaliniMean) {
  RngState rng(8);
  const std::size_t n = 1000000;
  const auto xs = sample_flip(azzalini_pi(1.0), rng, n);
  // alpha / sqrt(1 + alpha^2) * sqrt(2 / pi) at alpha = 1; mpmath.
  EXPECT_NEAR(moment_estimate(xs, 1), 0.56418958354775628,
              4.0 / std::sqrt(static_cast<double>(n)));
  EXPECT_NEAR(0.56418958354775628, 0.5642, 1e-4);
}

TEST(Moments, Exact) {
  const std::vector<double> xs = {1.0, -2.0, 3.0};
  EXPECT_NEAR(moment_estimate(xs, 1), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(moment_estimate(xs, 2), 14.0 / 3.0, 1e-15);
  EXPECT_NEAR(moment_estimate(xs, 3), 20.0 / 3.0, 1e-15);
  EXPECT_NEAR(moment_estimate(xs, 4), 98.0 / 3.0, 1e-14);
  EXPECT_THROW(moment_estimate(xs, 0), DomainError);
  EXPECT_THROW(moment_estimate(xs, 5), DomainError);
}
