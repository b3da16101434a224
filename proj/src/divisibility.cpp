#include "skewlab/divisibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "skewlab/kernels.hpp"

namespace skewlab {

using numcore::kLn2;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kStableRelChange = 1e-6;
constexpr double kMinGrowthRatio = 1.001;
constexpr int kJudgedRefinements = 3;

// Aliasing constructor with an empty owner: composes a caller-owned
// mechanism without taking ownership.
SkewedDistribution borrow_composed(const SkewingMechanism& mech) {
  return SkewedDistribution(MechanismPtr(std::shared_ptr<void>{}, &mech));
}

void require_tail_grid(std::span<const double> ys) {
  if (ys.empty()) throw DomainError("steutel_statistic: empty y grid");
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (!(ys[i] > 1.0) || !std::isfinite(ys[i])) {
      throw DomainError("steutel_statistic: every y must be finite and > 1");
    }
    if (i > 0 && !(ys[i] > ys[i - 1])) {
      throw DomainError("steutel_statistic: y grid must be strictly increasing");
    }
  }
}

double relative_change(double before, double after) {
  return (after - before) / after;
}

}  // namespace

TailReport steutel_statistic(const ContinuousDistribution& dist,
                             std::span<const double> ys) {
  require_tail_grid(ys);
  std::vector<double> log_tails(ys.size());
  kernels::log_tail_masses(dist, ys, log_tails);
  TailReport report;
  report.rows.reserve(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double y = ys[i];
    const LogProb lt(log_tails[i]);
    double stat = -lt.value() / (y * std::log(y));
    const bool flagged = lt.is_zero() || !std::isfinite(stat);
    if (flagged) stat = kNaN;
    report.rows.push_back(TailRow{y, lt, stat, flagged});
  }
  return report;
}

std::string to_string(Boundedness b) {
  switch (b) {
    case Boundedness::Bounded:
      return "BOUNDED";
    case Boundedness::Unbounded:
      return "UNBOUNDED";
    case Boundedness::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NotInfinitelyDivisible:
      return "NOT_ID";
    case Verdict::NormalEscape:
      return "NORMAL_ESCAPE";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

BoundednessReport estimate_sup_p(const SkewingMechanism& mech, int depth) {
  if (depth < kJudgedRefinements) {
    throw DomainError("estimate_sup_p: depth must be at least 3");
  }
  BoundednessReport report;
  report.analytic_bound = mech.analytic_sup();

  double sup = 0.0;
  std::size_t grid_size = 0;
  auto visit = [&](const UnitPoint& pt) {
    const double v = std::exp(mech.log_p(pt));
    if (std::isnan(v)) throw DomainError("estimate_sup_p: p evaluated to NaN");
    sup = std::max(sup, v);
    ++grid_size;
  };

  std::size_t endpoint_steps = 0;
  for (int level = 1; level <= depth; ++level) {
    // Dyadic interior grid i / 2^(level+6); only the new (odd) nodes are
    // visited since the even ones belong to the previous level.
    const std::size_t n = std::size_t{1} << (level + 6);
    const std::size_t stride = level == 1 ? 1 : 2;
    for (std::size_t i = 1; i < n; i += stride) {
      visit(UnitPoint::from_probability(static_cast<double>(i) / static_cast<double>(n)));
    }
    // Endpoint points 10^(-j/4) from each side, reaching 1e-12 at the last level.
    const auto steps = static_cast<std::size_t>(48 * level / depth);
    for (std::size_t j = endpoint_steps + 1; j <= steps; ++j) {
      const double delta = std::pow(10.0, -static_cast<double>(j) / 4.0);
      visit(UnitPoint::from_probability(delta));
      visit(UnitPoint::from_complement(delta));
    }
    endpoint_steps = steps;
    report.refinement_trace.push_back({grid_size, sup});
  }
  report.sup_estimate = sup;

  const auto& trace = report.refinement_trace;
  const std::size_t last = trace.size() - 1;
  bool stable = std::isfinite(sup);
  bool growing = true;
  double previous_log_ratio = 0.0;
  for (std::size_t k = last + 1 - kJudgedRefinements; k <= last; ++k) {
    const double before = trace[k - 1].sup;
    const double after = trace[k].sup;
    if (!(relative_change(before, after) <= kStableRelChange)) stable = false;
    const double ratio = after / before;
    const double log_ratio = std::log(ratio);
    if (!(ratio >= kMinGrowthRatio)) growing = false;
    if (k > last + 1 - kJudgedRefinements && log_ratio < 0.5 * previous_log_ratio) {
      growing = false;
    }
    previous_log_ratio = log_ratio;
  }
  // A closed-form bound the grid never exceeds certifies boundedness even
  // when the sup is only approached at an endpoint and so keeps creeping up.
  const bool analytic_holds =
      report.analytic_bound && sup <= *report.analytic_bound * (1.0 + 1e-12);
  if (std::isinf(sup)) {
    report.classification = Boundedness::Unbounded;
  } else if (stable || analytic_holds) {
    report.classification = Boundedness::Bounded;
  } else if (growing) {
    report.classification = Boundedness::Unbounded;
  } else {
    report.classification = Boundedness::Inconclusive;
  }
  return report;
}

std::optional<double> certified_bound(const SkewingMechanism& mech,
                                      const BoundednessReport& report) {
  if (auto analytic = mech.analytic_sup()) return analytic;
  if (report.classification == Boundedness::Bounded) return report.sup_estimate;
  return std::nullopt;
}

std::vector<InequalityRow> verify_theorem1_bound(const SkewingMechanism& mech,
                                                 std::span<const double> ys) {
  const auto bound = certified_bound(mech, estimate_sup_p(mech));
  if (!bound) {
    throw PreconditionError("verify_theorem1_bound: " + mech.describe() +
                            " has no certified bound on p");
  }
  return verify_theorem1_bound(mech, *bound, ys);
}

std::vector<InequalityRow> verify_theorem1_bound(const SkewingMechanism& mech,
                                                 double bound,
                                                 std::span<const double> ys) {
  if (!(bound > 0.0) || !std::isfinite(bound)) {
    throw DomainError("verify_theorem1_bound: bound must be positive and finite");
  }
  const SkewedDistribution dist = borrow_composed(mech);
  std::vector<double> tails(ys.size());
  kernels::log_tail_masses(dist, ys, tails);
  std::vector<InequalityRow> rows;
  rows.reserve(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double rhs = std::log(bound) + kLn2 + numcore::log_normal_sf(ys[i]).value();
    const double slack = 1e-12 * std::max(1.0, std::abs(rhs));
    rows.push_back({ys[i], tails[i], rhs, tails[i] <= rhs + slack});
  }
  return rows;
}

std::vector<ChainRow> verify_theorem2_chain(double gamma, std::span<const double> ys) {
  if (!(gamma > -1.0 && gamma < 1.0) || gamma == 0.0) {
    throw DomainError("verify_theorem2_chain: gamma must lie in (-1,0) or (0,1)");
  }
  const double g = -std::abs(gamma);
  const SkewedDistribution dist(TwoPiece::epsilon_skew(gamma));
  std::vector<ChainRow> rows;
  rows.reserve(ys.size());
  for (const double y : ys) {
    if (!(y > 0.0) || !std::isfinite(y)) {
      throw DomainError("verify_theorem2_chain: every y must be positive and finite");
    }
    const double tail = log_tail_mass(dist, y).value();
    const double middle =
        kLn2 + std::log1p(-g) + numcore::log_normal_sf(y / (1.0 - g)).value();
    const double right = 2.0 * kLn2 + numcore::log_normal_sf(y / 2.0).value();
    rows.push_back({y, tail, middle, right, tail < middle, middle < right});
  }
  return rows;
}

DivisibilityVerdict divisibility_verdict(const SkewingMechanism& mech) {
  DivisibilityVerdict out;
  out.boundedness = estimate_sup_p(mech);
  out.tail = steutel_statistic(borrow_composed(mech), kDefaultTailGrid);
  const auto bound = certified_bound(mech, out.boundedness);
  out.bound = bound;

  if (mech.is_identity()) {
    out.verdict = Verdict::NormalEscape;
    out.rule = "none";
    out.note = "parameters reduce the construction to a normal law";
    return out;
  }
  if (const auto* two_piece = dynamic_cast<const TwoPiece*>(&mech)) {
    std::ostringstream note;
    note.precision(17);
    note << "two-piece with a != b; equivalent epsilon-skew gamma = "
         << (two_piece->b() - two_piece->a()) / (two_piece->a() + two_piece->b());
    out.verdict = Verdict::NotInfinitelyDivisible;
    out.rule = "theorem-2";
    out.note = note.str();
    return out;
  }
  if (bound) {
    out.verdict = Verdict::NotInfinitelyDivisible;
    out.rule = "theorem-1";
    out.note = mech.analytic_sup() ? "closed-form bound on p"
                                   : "numerically stabilized bound on p";
    if (const auto* os = dynamic_cast<const OrderStatistics*>(&mech)) {
      if (os->psi1() == 1.0 || os->psi2() == 1.0) {
        out.note +=
            "; psi = 1 lies outside the strict psi1 > 1, psi2 > 1 corollary range, "
            "so the bound hypothesis is applied directly";
      }
    }
    return out;
  }
  out.verdict = Verdict::Inconclusive;
  out.rule = "none";
  out.note = "p is not certified bounded and no two-piece rule applies";
  return out;
}

}  // namespace skewlab
