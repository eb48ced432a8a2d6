#include "tightspan/circle_span.hpp"

#include <algorithm>
#include <cmath>

#include "tightspan/errors.hpp"
#include "tightspan/rng.hpp"

namespace tightspan::circle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

std::vector<double> center_values(const std::vector<double>& values) {
  std::vector<double> w(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (!std::isfinite(values[j]))
      throw PreconditionError("non-finite grid value");
    w[j] = values[j] - kHalfPi;
  }
  return w;
}

}  // namespace

GridFunction::GridFunction(std::size_t n_cells, const std::vector<double>& values)
    : n_(n_cells), w_(center_values(values)) {
  if (n_cells == 0) throw PreconditionError("n_cells must be positive");
  if (values.size() != n_cells + 1)
    throw PreconditionError("grid function needs N+1 values");
}

GridFunction GridFunction::from_centered(std::size_t n_cells,
                                         std::vector<double> w) {
  if (n_cells == 0 || w.size() != n_cells + 1)
    throw PreconditionError("grid function needs N+1 values");
  GridFunction f(n_cells, std::vector<double>(n_cells + 1, 0.0));
  f.w_ = std::move(w);
  return f;
}

std::vector<double> GridFunction::values() const {
  std::vector<double> out(w_.size());
  for (std::size_t j = 0; j < w_.size(); ++j) out[j] = w_[j] + kHalfPi;
  return out;
}

CircleGridFunction::CircleGridFunction(std::size_t n_cells,
                                       const std::vector<double>& values)
    : w_(center_values(values)) {
  if (n_cells == 0 || n_cells % 2 != 0)
    throw PreconditionError("circle grid needs an even cell count");
  if (values.size() != n_cells)
    throw PreconditionError("circle grid function needs 2N values");
}

CircleGridFunction CircleGridFunction::from_centered(std::size_t n_cells,
                                                     std::vector<double> w) {
  if (n_cells == 0 || n_cells % 2 != 0 || w.size() != n_cells)
    throw PreconditionError("circle grid function needs 2N values");
  return CircleGridFunction(std::move(w));
}

std::vector<double> CircleGridFunction::values() const {
  std::vector<double> out(w_.size());
  for (std::size_t j = 0; j < w_.size(); ++j) out[j] = w_[j] + kHalfPi;
  return out;
}

double CircleGridFunction::min_value() const {
  double m = w_[0];
  for (double v : w_) m = std::min(m, v);
  return m + kHalfPi;
}

IntervalSubset::IntervalSubset(std::vector<std::pair<double, double>> intervals)
    : intervals_(std::move(intervals)) {
  double prev_end = 0.0;
  for (const auto& [a, b] : intervals_) {
    if (!(a >= prev_end - 1e-15) || !(b >= a) || b > kPi + 1e-15)
      throw PreconditionError(
          "intervals must be sorted, disjoint and contained in [0, pi]");
    prev_end = b;
  }
}

double IntervalSubset::measure() const {
  double m = 0.0;
  for (const auto& [a, b] : intervals_) m += b - a;
  return m;
}

double IntervalSubset::measure_below(double phi) const {
  double m = 0.0;
  for (const auto& [a, b] : intervals_) {
    if (phi <= a) break;
    m += std::min(b, phi) - a;
  }
  return m;
}

bool in_F(const GridFunction& f) {
  const double tol = tol_grid(f.n_cells());
  const double step = f.step();
  for (std::size_t j = 0; j < f.n_cells(); ++j)
    if (std::abs(f.centered(j + 1) - f.centered(j)) > step + tol) return false;
  if (std::abs(f.centered(0) + f.centered(f.n_cells())) > tol) return false;
  for (std::size_t j = 0; j <= f.n_cells(); ++j)
    if (std::abs(f.centered(j)) > kHalfPi + tol) return false;
  return true;
}

bool in_E(const CircleGridFunction& f) {
  const std::size_t m = f.n_cells();
  const double tol = tol_grid(f.half());
  const double step = f.step();
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t next = (j + 1) % m;
    if (std::abs(f.centered(next) - f.centered(j)) > step + tol) return false;
    if (std::abs(f.centered(j) + f.centered((j + f.half()) % m)) > tol)
      return false;
  }
  return true;
}

CircleGridFunction extend_to_circle(const GridFunction& f) {
  if (!in_F(f)) throw PreconditionError("extend_to_circle requires f in F(S^1)");
  const std::size_t n = f.n_cells();
  std::vector<double> w(2 * n);
  for (std::size_t j = 0; j <= n; ++j) w[j] = f.centered(j);
  for (std::size_t j = n + 1; j < 2 * n; ++j) w[j] = -f.centered(j - n);
  return CircleGridFunction::from_centered(2 * n, std::move(w));
}

double sup_dist(const GridFunction& f, const GridFunction& g) {
  if (f.n_cells() != g.n_cells()) throw PreconditionError("grid mismatch");
  double m = 0.0;
  for (std::size_t j = 0; j <= f.n_cells(); ++j)
    m = std::max(m, std::abs(f.centered(j) - g.centered(j)));
  return m;
}

double sup_dist(const CircleGridFunction& f, const CircleGridFunction& g) {
  if (f.n_cells() != g.n_cells()) throw PreconditionError("grid mismatch");
  double m = 0.0;
  for (std::size_t j = 0; j < f.n_cells(); ++j)
    m = std::max(m, std::abs(f.centered(j) - g.centered(j)));
  return m;
}

GridFunction h_A(const IntervalSubset& a, std::size_t n_cells) {
  const double mu = a.measure();
  std::vector<double> w(n_cells + 1);
  const double step = kPi / static_cast<double>(n_cells);
  for (std::size_t j = 0; j <= n_cells; ++j) {
    const double phi = static_cast<double>(j) * step;
    w[j] = (kHalfPi - mu) + 2.0 * a.measure_below(phi) - phi;
  }
  return GridFunction::from_centered(n_cells, std::move(w));
}

bool is_extreme(const GridFunction& f, double tol_slope) {
  if (!in_F(f)) throw PreconditionError("is_extreme requires f in F(S^1)");
  const double step = f.step();
  for (std::size_t j = 0; j < f.n_cells(); ++j) {
    const double slope = (f.centered(j + 1) - f.centered(j)) / step;
    if (std::abs(std::abs(slope) - 1.0) > tol_slope) return false;
  }
  return true;
}

GridFunction center_function(std::size_t n_cells) {
  return GridFunction::from_centered(n_cells,
                                     std::vector<double>(n_cells + 1, 0.0));
}

GridFunction kuratowski_grid(std::size_t n_cells, double theta) {
  const CirclePoint base(theta);
  std::vector<double> w(n_cells + 1);
  const double step = kPi / static_cast<double>(n_cells);
  for (std::size_t j = 0; j <= n_cells; ++j)
    w[j] = circle_dist(base, CirclePoint(static_cast<double>(j) * step)) - kHalfPi;
  return GridFunction::from_centered(n_cells, std::move(w));
}

CircleGridFunction kuratowski_circle(std::size_t n_cells, double theta) {
  const CirclePoint base(theta);
  std::vector<double> w(2 * n_cells);
  const double step = kPi / static_cast<double>(n_cells);
  for (std::size_t j = 0; j < 2 * n_cells; ++j)
    w[j] = circle_dist(base, CirclePoint(static_cast<double>(j) * step)) - kHalfPi;
  return CircleGridFunction::from_centered(2 * n_cells, std::move(w));
}

DecomposeResult decompose_extreme(const GridFunction& f, int m,
                                  std::uint64_t seed) {
  if (!in_F(f))
    throw PreconditionError("decompose_extreme requires f in F(S^1)");
  if (m < 1) throw PreconditionError("sample count must be positive");
  const std::size_t n = f.n_cells();
  const double step = f.step();

  std::vector<double> p_up(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double slope =
        std::clamp((f.centered(j + 1) - f.centered(j)) / step, -1.0, 1.0);
    p_up[j] = 0.5 * (1.0 + slope);
  }

  std::vector<double> sum(n + 1, 0.0);
  std::vector<IntervalSubset> parts;
  parts.reserve(static_cast<std::size_t>(m));
  std::vector<double> path(n + 1);
  std::vector<bool> up(n);
  for (int t = 0; t < m; ++t) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
    path[0] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      // Slopes already at +-1 are kept deterministic.
      bool plus;
      if (p_up[j] >= 1.0 - 1e-9)
        plus = true;
      else if (p_up[j] <= 1e-9)
        plus = false;
      else
        plus = rng.uniform() < p_up[j];
      up[j] = plus;
      path[j + 1] = path[j] + (plus ? step : -step);
    }
    // Re-anchor so w(0) + w(pi) = 0; the shift keeps every slope at +-1.
    const double shift = -0.5 * path[n];
    for (std::size_t j = 0; j <= n; ++j) sum[j] += path[j] + shift;

    std::vector<std::pair<double, double>> cells;
    std::size_t j = 0;
    while (j < n) {
      if (up[j]) {
        std::size_t k = j;
        while (k < n && up[k]) ++k;
        cells.emplace_back(static_cast<double>(j) * step,
                           k == n ? kPi : static_cast<double>(k) * step);
        j = k;
      } else {
        ++j;
      }
    }
    parts.emplace_back(std::move(cells));
  }

  std::vector<double> avg(n + 1);
  for (std::size_t j = 0; j <= n; ++j) avg[j] = sum[j] / static_cast<double>(m);
  GridFunction rec = GridFunction::from_centered(n, std::move(avg));
  const double err = sup_dist(rec, f);
  return DecomposeResult{std::move(parts), std::move(rec), err};
}

CenterReport center_check(const std::vector<GridFunction>& fs) {
  CenterReport report;
  for (const auto& f : fs) {
    if (!in_F(f)) throw PreconditionError("center_check requires F members");
    const double tol = tol_grid(f.n_cells());
    double dist = 0.0;
    std::size_t arg = 0;
    for (std::size_t j = 0; j <= f.n_cells(); ++j) {
      const double dev = std::abs(f.centered(j));
      if (dev > dist) {
        dist = dev;
        arg = j;
      }
    }
    report.max_center_distance = std::max(report.max_center_distance, dist);
    if (dist > kHalfPi + tol) report.radius_bound_ok = false;

    // Kuratowski witness: base at the node of largest deviation (or its
    // antipode when the deviation is downward) realizes distance pi/2 + m.
    const double margin = dist;
    const double base = f.centered(arg) >= 0.0
                            ? f.theta(arg)
                            : f.theta(arg) + kPi;
    const double witness_dist = sup_dist(f, kuratowski_grid(f.n_cells(), base));
    const double slack = witness_dist - (kHalfPi + margin - tol);
    if (slack < 0.0) report.witness_ok = false;
    report.worst_witness_slack =
        std::max(report.worst_witness_slack, kHalfPi + margin - witness_dist);
  }
  return report;
}

bool in_thickening(const CircleGridFunction& f, double r) {
  if (!in_E(f)) throw PreconditionError("in_thickening requires f in E(S^1)");
  if (r <= 0.0) throw PreconditionError("thickening radius must be positive");
  return f.min_value() < r - tol_grid(f.half());
}

ComplementOutcome complement_lemma_check(const CircleGridFunction& f, double r) {
  if (!in_E(f))
    throw PreconditionError("complement_lemma_check requires f in E(S^1)");
  if (r <= 0.0 || r > kHalfPi)
    throw PreconditionError("complement_lemma_check requires r in (0, pi/2]");
  const double band = tol_grid(f.half());
  const double min_value = f.min_value();
  double max_dev = 0.0;
  for (std::size_t j = 0; j < f.n_cells(); ++j)
    max_dev = std::max(max_dev, std::abs(f.centered(j)));
  if (std::abs(min_value - r) <= band ||
      std::abs(max_dev - (kHalfPi - r)) <= band)
    return ComplementOutcome::Indeterminate;
  const bool in_b_r = min_value < r;
  const bool outside_ball = max_dev > kHalfPi - r;
  return in_b_r == outside_ball ? ComplementOutcome::Equivalent
                                : ComplementOutcome::Violated;
}

std::optional<Arc> sublevel_arc(const CircleGridFunction& f, double r) {
  if (!in_E(f)) throw PreconditionError("sublevel_arc requires f in E(S^1)");
  if (r <= 0.0 || r > kPi / 3.0 + 1e-12)
    throw PreconditionError("sublevel_arc requires r in (0, pi/3]");
  const std::size_t m = f.n_cells();
  std::vector<std::size_t> hits;
  for (std::size_t j = 0; j < m; ++j)
    if (f.centered(j) + kHalfPi < r) hits.push_back(j);
  if (hits.empty()) return std::nullopt;

  // The minimal covering arc is the complement of the largest circular gap.
  std::size_t gap_start = 0;
  std::size_t best_gap = 0;
  for (std::size_t t = 0; t < hits.size(); ++t) {
    const std::size_t a = hits[t];
    const std::size_t b = hits[(t + 1) % hits.size()];
    const std::size_t gap = (b + m - a) % m;
    if (gap > best_gap) {
      best_gap = gap;
      gap_start = t;
    }
  }
  const std::size_t start = hits[(gap_start + 1) % hits.size()];
  const std::size_t end = hits[gap_start];
  const std::size_t span = (end + m - start) % m;
  const double length = static_cast<double>(span) * f.step();
  if (length > 2.0 * r + 2.0 * f.step())
    throw PreconditionError(
        "sublevel set exceeds the semicircle bound; input is not a valid "
        "member of E(S^1) at this radius");
  return Arc{f.theta(start), length, start};
}

namespace {

CirclePoint barycenter_impl(const CircleGridFunction& f, double r,
                            double theta_start, std::size_t start_index) {
  const std::size_t m = f.n_cells();
  const std::size_t half = f.half();
  const double step = f.step();
  // Trapezoid rule over [theta_f, theta_f + pi]; the sublevel indicator is
  // evaluated per node, no sub-grid root finding.
  auto weight = [&](std::size_t t) {
    const double val = f.centered((start_index + t) % m) + kHalfPi;
    return val < r ? r - val : 0.0;
  };
  double s = 0.0, e = 0.0;
  for (std::size_t t = 0; t < half; ++t) {
    const double w0 = weight(t);
    const double w1 = weight(t + 1);
    const double x0 = theta_start + static_cast<double>(t) * step;
    const double x1 = theta_start + static_cast<double>(t + 1) * step;
    s += 0.5 * (w0 + w1) * step;
    e += 0.5 * (x0 * w0 + x1 * w1) * step;
  }
  if (s <= 0.0)
    throw PreconditionError("barycenter: empty sublevel set on the grid");
  return CirclePoint(e / s);
}

}  // namespace

CirclePoint barycenter(const CircleGridFunction& f, double r) {
  if (!in_thickening(f, r))
    throw PreconditionError("barycenter requires f in B_r");
  const auto arc = sublevel_arc(f, r);
  if (!arc) throw PreconditionError("barycenter: empty sublevel set");
  return barycenter_impl(f, r, arc->start, arc->start_index);
}

CirclePoint barycenter_from(const CircleGridFunction& f, double r,
                            double theta_start) {
  if (!in_thickening(f, r))
    throw PreconditionError("barycenter requires f in B_r");
  const auto arc = sublevel_arc(f, r);
  if (!arc) throw PreconditionError("barycenter: empty sublevel set");
  return barycenter_impl(f, r, theta_start, arc->start_index);
}

CircleGridFunction homotopy_step(const CircleGridFunction& f, double t,
                                 double r) {
  if (t < 0.0 || t > 1.0) throw PreconditionError("t must lie in [0, 1]");
  const CirclePoint m = barycenter(f, r);
  const CircleGridFunction kappa = kuratowski_circle(f.half(), m.angle);
  std::vector<double> w(f.n_cells());
  for (std::size_t j = 0; j < f.n_cells(); ++j)
    w[j] = t * f.centered(j) + (1.0 - t) * kappa.centered(j);
  return CircleGridFunction::from_centered(f.n_cells(), std::move(w));
}

CircleGridFunction linear_bicombing(const CircleGridFunction& f,
                                    const CircleGridFunction& g, double t) {
  if (f.n_cells() != g.n_cells()) throw PreconditionError("grid mismatch");
  if (t < 0.0 || t > 1.0) throw PreconditionError("t must lie in [0, 1]");
  if (!in_E(f) || !in_E(g))
    throw PreconditionError("linear_bicombing requires E(S^1) members");
  std::vector<double> w(f.n_cells());
  for (std::size_t j = 0; j < f.n_cells(); ++j)
    w[j] = (1.0 - t) * f.centered(j) + t * g.centered(j);
  return CircleGridFunction::from_centered(f.n_cells(), std::move(w));
}

}  // namespace tightspan::circle
