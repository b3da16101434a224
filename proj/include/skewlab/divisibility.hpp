#pragma once

// Numerical certificates of non-infinite-divisibility for skewed normals.
//
// The operative criterion: for a non-normal infinitely divisible law the
// statistic T(y) = -ln[S(-y) + 1 - S(y)] / (y ln y) has a finite limsup, so
// normal-like growth of T certifies non-divisibility. Two sufficient routes
// feed it: a bounded mechanism density (p <= M squeezes the tails under
// M times the normal tails), and the two-piece chain
// tail < 2(1-g) Phi(-y/(1-g)) < 4 Phi(-y/2) for -1 < g < 0.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewlab/mechanisms.hpp"

namespace skewlab {

inline constexpr double kDefaultTailGrid[] = {1.5, 2, 3, 5, 8, 10, 15, 20, 30};

struct TailRow {
  double y;
  LogProb log_tail;
  double statistic;  // NaN when flagged
  bool flagged;      // tail mass numerically zero or statistic not finite
};

struct TailReport {
  std::vector<TailRow> rows;
};

/// T(y) for each y of a strictly increasing grid with all y > 1.
TailReport steutel_statistic(const ContinuousDistribution& dist,
                             std::span<const double> ys);

enum class Boundedness { Bounded, Unbounded, Inconclusive };
std::string to_string(Boundedness b);

struct SupTraceEntry {
  std::size_t grid_size;
  double sup;
};

struct BoundednessReport {
  double sup_estimate = 0.0;
  std::vector<SupTraceEntry> refinement_trace;
  Boundedness classification = Boundedness::Inconclusive;
  std::optional<double> analytic_bound;
};

inline constexpr int kDefaultSupDepth = 8;

/// Running sup of p over nested grids: a dyadic grid that doubles per level
/// plus log-spaced points reaching 1e-12 from each endpoint at the last
/// level. BOUNDED needs relative changes <= 1e-6 over the last three
/// refinements; UNBOUNDED needs steady geometric growth over them.
BoundednessReport estimate_sup_p(const SkewingMechanism& mech,
                                 int depth = kDefaultSupDepth);

/// The bound M usable as a hypothesis: the closed form when the family has
/// one, else the numeric sup if it stabilized.
std::optional<double> certified_bound(const SkewingMechanism& mech,
                                      const BoundednessReport& report);

struct InequalityRow {
  double y;
  double lhs;  // natural-log scale
  double rhs;
  bool pass;
};

/// ln tail_S(y) <= ln M + ln(2 Phi(-y)) row by row, M the certified bound.
/// Equality cases are accepted up to a few ulps of rounding.
std::vector<InequalityRow> verify_theorem1_bound(const SkewingMechanism& mech,
                                                 std::span<const double> ys);
/// Same with a caller-supplied bound.
std::vector<InequalityRow> verify_theorem1_bound(const SkewingMechanism& mech,
                                                 double bound,
                                                 std::span<const double> ys);

struct ChainRow {
  double y;
  double log_tail;
  double log_middle;  // ln[2(1-g) Phi(-y/(1-g))]
  double log_right;   // ln[4 Phi(-y/2)]
  bool first_pass;    // tail < middle
  bool second_pass;   // middle < right
};

/// Two-piece epsilon-skew chain. gamma in (0,1) is reduced to -gamma by
/// reflection for the bounding terms; the tail itself is always taken from
/// the distribution with the given gamma.
std::vector<ChainRow> verify_theorem2_chain(double gamma, std::span<const double> ys);

enum class Verdict { NotInfinitelyDivisible, NormalEscape, Inconclusive };
std::string to_string(Verdict v);

struct DivisibilityVerdict {
  Verdict verdict = Verdict::Inconclusive;
  std::string rule;  // "theorem-1", "theorem-2" or "none"
  std::optional<double> bound;
  std::string note;
  BoundednessReport boundedness;
  TailReport tail;
};

DivisibilityVerdict divisibility_verdict(const SkewingMechanism& mech);

}  // namespace skewlab
