#include "tightspan/metric_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tightspan/errors.hpp"

namespace tightspan {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

FiniteMetricSpace FiniteMetricSpace::create(std::vector<std::string> labels,
                                            std::vector<std::vector<double>> dist,
                                            double tol) {
  const std::size_t n = labels.size();
  if (n == 0) throw SchemaError("metric space needs at least one point");
  if (dist.size() != n)
    throw SchemaError("distance table size does not match label count");
  for (const auto& row : dist)
    if (row.size() != n) throw SchemaError("distance table is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i][i] != 0.0) throw SchemaError("nonzero diagonal in distance table");
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(dist[i][j]) || dist[i][j] < 0.0)
        throw SchemaError("distances must be finite and nonnegative");
      if (std::abs(dist[i][j] - dist[j][i]) > tol)
        throw SchemaError("distance table is not symmetric");
      if (i != j && dist[i][j] <= 0.0)
        throw SchemaError("distinct points at zero distance");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (dist[i][j] > dist[i][k] + dist[k][j] + tol)
          throw SchemaError("triangle inequality violated");
  return FiniteMetricSpace{std::move(labels), std::move(dist)};
}

FiniteMetricSpace FiniteMetricSpace::from_table(
    std::vector<std::vector<double>> dist, double tol) {
  std::vector<std::string> labels(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) labels[i] = std::to_string(i + 1);
  return create(std::move(labels), std::move(dist), tol);
}

std::size_t FiniteMetricSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw PreconditionError("unknown label: " + label);
}

CirclePoint::CirclePoint(double raw) {
  double r = std::fmod(raw, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  angle = r;
}

SpherePoint SpherePoint::checked(std::vector<double> coords, double tol) {
  double norm2 = 0.0;
  for (double c : coords) norm2 += c * c;
  if (std::abs(std::sqrt(norm2) - 1.0) > tol)
    throw PreconditionError("sphere point is not unit norm");
  return SpherePoint{std::move(coords)};
}

SpherePoint SpherePoint::normalized(std::vector<double> coords) {
  double norm2 = 0.0;
  for (double c : coords) norm2 += c * c;
  if (norm2 <= 0.0) throw PreconditionError("cannot normalize the zero vector");
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& c : coords) c *= inv;
  return SpherePoint{std::move(coords)};
}

double circle_dist(CirclePoint a, CirclePoint b) {
  const double gap = std::abs(a.angle - b.angle);
  return std::min(gap, kTwoPi - gap);
}

double sphere_dist(const SpherePoint& u, const SpherePoint& v) {
  if (u.dim() != v.dim())
    throw PreconditionError("sphere points of different dimension");
  double nu = 0.0, nv = 0.0, dot = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    nu += u.coords[i] * u.coords[i];
    nv += v.coords[i] * v.coords[i];
    dot += u.coords[i] * v.coords[i];
  }
  if (std::abs(std::sqrt(nu) - 1.0) > kTolUnit ||
      std::abs(std::sqrt(nv) - 1.0) > kTolUnit)
    throw PreconditionError("sphere_dist requires unit vectors");
  // Chord-based evaluation: acos(dot) loses half the significand near
  // coincident or antipodal points, asin of the half-chord does not.
  double chord2 = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const double gap = dot >= 0.0 ? u.coords[i] - v.coords[i]
                                  : u.coords[i] + v.coords[i];
    chord2 += gap * gap;
  }
  const double half = 2.0 * std::asin(std::min(1.0, 0.5 * std::sqrt(chord2)));
  return dot >= 0.0 ? half : std::numbers::pi - half;
}

double linf_dist(const LinfPoint& x, const LinfPoint& y) {
  if (x.dim() != y.dim()) throw PreconditionError("dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i)
    m = std::max(m, std::abs(x.coords[i] - y.coords[i]));
  return m;
}

double four_point_delta(const FiniteMetricSpace& x) {
  const std::size_t n = x.size();
  double delta = 0.0;
  // Quadruples with repeated points satisfy the condition with delta = 0 by
  // the metric axioms, so distinct 4-subsets suffice.
  for (std::size_t a = 0; a + 3 < n; ++a)
    for (std::size_t b = a + 1; b + 2 < n; ++b)
      for (std::size_t c = b + 1; c + 1 < n; ++c)
        for (std::size_t e = c + 1; e < n; ++e) {
          double s0 = x.d(a, b) + x.d(c, e);
          double s1 = x.d(a, c) + x.d(b, e);
          double s2 = x.d(a, e) + x.d(b, c);
          if (s0 < s1) std::swap(s0, s1);
          if (s0 < s2) std::swap(s0, s2);
          if (s1 < s2) std::swap(s1, s2);
          delta = std::max(delta, s0 - s1);
        }
  return delta;
}

std::optional<std::vector<std::size_t>> antipode_map(const FiniteMetricSpace& x,
                                                     double tol) {
  const std::size_t n = x.size();
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    // Ties resolved by smallest index for determinism.
    for (std::size_t j = 0; j < n && !found; ++j) {
      bool ok = true;
      for (std::size_t y = 0; y < n; ++y) {
        if (std::abs(x.d(i, j) - (x.d(i, y) + x.d(y, j))) > tol) {
          ok = false;
          break;
        }
      }
      if (ok) {
        map[i] = j;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return map;
}

double diameter(const FiniteMetricSpace& x) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) m = std::max(m, x.d(i, j));
  return m;
}

double radius(const FiniteMetricSpace& x) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    double ecc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) ecc = std::max(ecc, x.d(i, j));
    best = std::min(best, ecc);
  }
  return best;
}

double hausdorff_circle(const std::vector<CirclePoint>& sample,
                        std::size_t probe_count) {
  if (sample.empty()) throw PreconditionError("hausdorff_circle: empty sample");
  double worst = 0.0;
  for (std::size_t t = 0; t < probe_count; ++t) {
    const CirclePoint probe(kTwoPi * static_cast<double>(t) /
                            static_cast<double>(probe_count));
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& s : sample) nearest = std::min(nearest, circle_dist(probe, s));
    worst = std::max(worst, nearest);
  }
  return worst;
}

}  // namespace tightspan
