#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "skewlab/numcore.hpp"

namespace skewlab::numcore {

namespace {

constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the nodes kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

enum class Map { Finite, Upper, Lower };

// A piece of the integration range in its own working coordinate: finite
// pieces integrate x directly, half-lines integrate t in (0,1].
struct Piece {
  Map map;
  double anchor;
};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  int piece;
  bool operator<(const Segment& other) const { return error < other.error; }
};

class Integrator {
 public:
  Integrator(const ScalarFn& fn, std::vector<Piece> pieces)
      : fn_(fn), pieces_(std::move(pieces)) {}

  double eval(int piece, double t) {
    ++evaluations_;
    const Piece& p = pieces_[piece];
    switch (p.map) {
      case Map::Finite:
        return fn_(t);
      case Map::Upper: {
        const double s = (1.0 - t) / t;
        return fn_(p.anchor + s) / (t * t);
      }
      case Map::Lower: {
        const double s = (1.0 - t) / t;
        return fn_(p.anchor - s) / (t * t);
      }
    }
    return 0.0;
  }

  Segment kronrod(int piece, double a, double b) {
    constexpr double epmach = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double abs_half = std::abs(half);
    const double fc = eval(piece, centre);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    std::array<double, 7> f1{};
    std::array<double, 7> f2{};
    for (int j = 0; j < 7; ++j) {
      const double dx = half * kXgk[j];
      f1[j] = eval(piece, centre - dx);
      f2[j] = eval(piece, centre + dx);
      const double sum = f1[j] + f2[j];
      resk += kWgk[j] * sum;
      resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
      if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
      resasc += kWgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));
    }
    resabs *= abs_half;
    resasc *= abs_half;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) {
      err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    if (resabs > uflow / (50.0 * epmach)) {
      err = std::max(50.0 * epmach * resabs, err);
    }
    return Segment{a, b, resk * half, err, piece};
  }

  QuadratureResult run(const Tolerance& tol) {
    std::priority_queue<Segment> heap;
    double total = 0.0;
    double total_err = 0.0;
    for (int i = 0; i < static_cast<int>(pieces_.size()); ++i) {
      const Piece& p = pieces_[i];
      const Segment s = p.map == Map::Finite ? kronrod(i, p.anchor, bounds_[i])
                                             : kronrod(i, 0.0, 1.0);
      total += s.value;
      total_err += s.error;
      heap.push(s);
    }
    int subdivisions = 0;
    auto converged = [&] {
      return total_err <= std::max(tol.abs_tol, tol.rel_tol * std::abs(total));
    };
    while (!converged()) {
      if (subdivisions >= tol.max_iter) {
        throw ConvergenceError("integrate: subdivision budget exhausted", total,
                               total_err);
      }
      const Segment worst = heap.top();
      heap.pop();
      const double mid = 0.5 * (worst.a + worst.b);
      const Segment left = kronrod(worst.piece, worst.a, mid);
      const Segment right = kronrod(worst.piece, mid, worst.b);
      total += left.value + right.value - worst.value;
      total_err += left.error + right.error - worst.error;
      heap.push(left);
      heap.push(right);
      ++subdivisions;
      if (!std::isfinite(total)) {
        throw ConvergenceError("integrate: non-finite integrand", total, kInf);
      }
    }
    // Re-sum to shed the drift of the running updates.
    total = 0.0;
    total_err = 0.0;
    const int count = static_cast<int>(heap.size());
    while (!heap.empty()) {
      total += heap.top().value;
      total_err += heap.top().error;
      heap.pop();
    }
    return QuadratureResult{total, total_err, count, evaluations_};
  }

  void add_finite(double a, double b) {
    pieces_.push_back({Map::Finite, a});
    bounds_.push_back(b);
  }
  void add_upper(double a) {
    pieces_.push_back({Map::Upper, a});
    bounds_.push_back(0.0);
  }
  void add_lower(double b) {
    pieces_.push_back({Map::Lower, b});
    bounds_.push_back(0.0);
  }

 private:
  const ScalarFn& fn_;
  std::vector<Piece> pieces_;
  std::vector<double> bounds_;
  int evaluations_ = 0;
};

QuadratureResult integrate_pieces(const ScalarFn& fn, double lo, double hi,
                                  std::vector<double> cuts, const Tolerance& tol) {
  tol.validate();
  if (std::isnan(lo) || std::isnan(hi)) {
    throw DomainError("integrate: NaN limit");
  }
  if (lo == hi) return {};
  if (lo > hi) {
    QuadratureResult r = integrate_pieces(fn, hi, lo, std::move(cuts), tol);
    r.value = -r.value;
    return r;
  }
  std::erase_if(cuts, [&](double c) { return !(c > lo && c < hi) || !std::isfinite(c); });
  if (std::isinf(lo) && std::isinf(hi) && cuts.empty()) cuts.push_back(0.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<double> edges;
  edges.push_back(lo);
  edges.insert(edges.end(), cuts.begin(), cuts.end());
  edges.push_back(hi);

  Integrator integrator(fn, {});
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i];
    const double b = edges[i + 1];
    if (std::isinf(a)) {
      integrator.add_lower(b);
    } else if (std::isinf(b)) {
      integrator.add_upper(a);
    } else {
      integrator.add_finite(a, b);
    }
  }
  return integrator.run(tol);
}

}  // namespace

QuadratureResult integrate_detailed(const ScalarFn& fn, double lo, double hi,
                                    const Tolerance& tol) {
  return integrate_pieces(fn, lo, hi, {}, tol);
}

double integrate(const ScalarFn& fn, double lo, double hi, const Tolerance& tol) {
  return integrate_pieces(fn, lo, hi, {}, tol).value;
}

double integrate(const ScalarFn& fn, double lo, double hi,
                 std::span<const double> breakpoints, const Tolerance& tol) {
  return integrate_pieces(fn, lo, hi, {breakpoints.begin(), breakpoints.end()},
                          tol)
      .value;
}

}  // namespace skewlab::numcore
