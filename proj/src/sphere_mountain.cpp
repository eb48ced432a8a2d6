#include "tightspan/sphere_mountain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tightspan/errors.hpp"
#include "tightspan/rng.hpp"

namespace tightspan::mountain {

namespace {

constexpr double kPi = std::numbers::pi;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Geodesic distance without per-call unit checks; configs and grids are
// validated once on construction. Chord form stays accurate where acos(dot)
// does not (coincident and antipodal pairs).
double geo(const SpherePoint& u, const SpherePoint& v) {
  const double d = dot(u.coords, v.coords);
  double chord2 = 0.0;
  for (std::size_t i = 0; i < u.coords.size(); ++i) {
    const double gap =
        d >= 0.0 ? u.coords[i] - v.coords[i] : u.coords[i] + v.coords[i];
    chord2 += gap * gap;
  }
  const double half = 2.0 * std::asin(std::min(1.0, 0.5 * std::sqrt(chord2)));
  return d >= 0.0 ? half : kPi - half;
}

SpherePoint negate(const SpherePoint& p) {
  std::vector<double> c(p.coords);
  for (auto& x : c) x = -x;
  return SpherePoint{std::move(c)};
}

std::vector<std::vector<double>> tangent_basis(const std::vector<double>& p) {
  const std::size_t d = p.size();
  std::vector<std::vector<double>> basis;
  basis.reserve(d - 1);
  for (std::size_t k = 0; k < d && basis.size() + 1 < d; ++k) {
    std::vector<double> v(d, 0.0);
    v[k] = 1.0;
    const double vp = dot(v, p);
    for (std::size_t i = 0; i < d; ++i) v[i] -= vp * p[i];
    for (const auto& b : basis) {
      const double vb = dot(v, b);
      for (std::size_t i = 0; i < d; ++i) v[i] -= vb * b[i];
    }
    const double norm = std::sqrt(dot(v, v));
    if (norm > 1e-6) {
      for (auto& x : v) x /= norm;
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

/// Deterministic direction set on the unit sphere of the tangent space.
std::vector<std::vector<double>> tangent_directions(
    const std::vector<std::vector<double>>& basis, int count) {
  const std::size_t t = basis.size();
  const std::size_t d = basis.front().size();
  std::vector<std::vector<double>> dirs;
  auto emit = [&](const std::vector<double>& coeff) {
    std::vector<double> v(d, 0.0);
    for (std::size_t a = 0; a < t; ++a)
      for (std::size_t i = 0; i < d; ++i) v[i] += coeff[a] * basis[a][i];
    dirs.push_back(std::move(v));
  };
  if (t == 1) {
    emit({1.0});
    emit({-1.0});
  } else if (t == 2) {
    for (int s = 0; s < count; ++s) {
      const double a = 2.0 * kPi * s / count;
      emit({std::cos(a), std::sin(a)});
    }
  } else if (t == 3) {
    // Fibonacci directions.
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int s = 0; s < count; ++s) {
      const double y = 1.0 - 2.0 * (s + 0.5) / count;
      const double rad = std::sqrt(std::max(0.0, 1.0 - y * y));
      const double a = golden * s;
      emit({rad * std::cos(a), y, rad * std::sin(a)});
    }
  } else {
    Rng rng(0x7A4E67u);  // fixed internal seed; reproducible by construction
    for (int s = 0; s < count; ++s) emit(rng.unit_vector(t));
  }
  return dirs;
}

double grid_spacing(const std::vector<SpherePoint>& pts) {
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double nn = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) nn = std::min(nn, geo(pts[i], pts[j]));
    worst = std::max(worst, nn);
  }
  return worst;
}

}  // namespace

SphereConfig SphereConfig::create(std::vector<SpherePoint> points,
                                  std::vector<double> values) {
  if (points.empty()) throw PreconditionError("empty configuration");
  const std::size_t d = points.front().dim();
  for (auto& p : points) {
    if (p.dim() != d) throw PreconditionError("mixed ambient dimensions");
    p = SpherePoint::checked(std::move(p.coords));
  }
  if (!values.empty() && values.size() != points.size())
    throw PreconditionError("values length does not match point count");
  for (double v : values)
    if (!std::isfinite(v)) throw PreconditionError("non-finite value");
  return SphereConfig{std::move(points), std::move(values)};
}

bool SphereConfig::antipodal_free(double tol) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (geo(points[i], points[j]) >= kPi - tol) return false;
  return true;
}

SphereSampleGrid circle_grid(std::size_t count) {
  if (count < 4 || count % 2 != 0)
    throw PreconditionError("circle grid needs an even count >= 4");
  SphereSampleGrid g;
  g.sample.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const double a = 2.0 * kPi * static_cast<double>(t) / count;
    g.sample.push_back(SpherePoint{{std::cos(a), std::sin(a)}});
    g.antipode.push_back((t + count / 2) % count);
  }
  g.max_nn_spacing = 2.0 * kPi / static_cast<double>(count);
  g.descriptor = "s1-uniform-" + std::to_string(count);
  return g;
}

SphereSampleGrid fibonacci_grid(std::size_t half_count) {
  if (half_count < 8) throw PreconditionError("grid too small");
  SphereSampleGrid g;
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (std::size_t s = 0; s < half_count; ++s) {
    const double y = 1.0 - 2.0 * (s + 0.5) / half_count;
    const double rad = std::sqrt(std::max(0.0, 1.0 - y * y));
    const double a = golden * static_cast<double>(s);
    SpherePoint p{{rad * std::cos(a), y, rad * std::sin(a)}};
    g.sample.push_back(p);
    g.sample.push_back(negate(p));
    g.antipode.push_back(2 * s + 1);
    g.antipode.push_back(2 * s);
  }
  g.max_nn_spacing = grid_spacing(g.sample);
  g.descriptor = "s2-fibonacci-" + std::to_string(2 * half_count);
  return g;
}

SphereSampleGrid random_grid(std::size_t sphere_dim, std::size_t half_count,
                             std::uint64_t seed) {
  if (sphere_dim < 1) throw PreconditionError("sphere dimension must be >= 1");
  if (half_count < 8) throw PreconditionError("grid too small");
  SphereSampleGrid g;
  Rng rng(seed);
  for (std::size_t s = 0; s < half_count; ++s) {
    SpherePoint p{rng.unit_vector(sphere_dim + 1)};
    g.sample.push_back(p);
    g.sample.push_back(negate(p));
    g.antipode.push_back(2 * s + 1);
    g.antipode.push_back(2 * s);
  }
  g.max_nn_spacing = grid_spacing(g.sample);
  g.descriptor = "s" + std::to_string(sphere_dim) + "-random-" +
                 std::to_string(2 * half_count);
  return g;
}

double mr_eval(const SphereConfig& p, const SpherePoint& x) {
  if (x.dim() != p.ambient_dim()) throw PreconditionError("dimension mismatch");
  if (p.values.size() != p.size())
    throw PreconditionError("mr_eval requires one value per point");
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i)
    m = std::min(m, geo(p.points[i], x) + p.values[i]);
  return m;
}

double config_diameter(const SphereConfig& p) {
  double m = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      m = std::max(m, geo(p.points[i], p.points[j]));
  return m;
}

bool mr_delta1_check(const SphereConfig& p, const SphereSampleGrid& grid,
                     double tol) {
  if (p.values.size() != p.size())
    throw PreconditionError("mr_delta1_check requires values");
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i; j < p.size(); ++j)
      if (p.values[i] + p.values[j] <
          geo(p.points[i], p.points[j]) - kTolMetric)
        throw PreconditionError("values do not lie in Delta(P)");
  std::vector<double> mr(grid.sample.size());
  for (std::size_t t = 0; t < grid.sample.size(); ++t)
    mr[t] = mr_eval(p, grid.sample[t]);
  for (std::size_t a = 0; a < grid.sample.size(); ++a)
    for (std::size_t b = a + 1; b < grid.sample.size(); ++b) {
      const double d = geo(grid.sample[a], grid.sample[b]);
      if (mr[a] + mr[b] < d - tol) return false;
      if (std::abs(mr[a] - mr[b]) > d + tol) return false;
    }
  return true;
}

std::vector<std::size_t> comax(const SphereConfig& p, std::size_t i,
                               double tol) {
  if (p.size() < 2) throw PreconditionError("comax needs at least two points");
  if (i >= p.size()) throw PreconditionError("index out of range");
  const double diam = config_diameter(p);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (j != i && geo(p.points[i], p.points[j]) >= diam - tol) out.push_back(j);
  return out;
}

bool is_held(const SphereConfig& p, std::size_t i, int dir_samples) {
  if (!p.antipodal_free())
    throw PreconditionError("is_held requires an antipodal-free configuration");
  const auto comaximal = comax(p, i);
  const auto& base = p.points[i].coords;
  // Unit log directions toward each comaximal point.
  std::vector<std::vector<double>> logs;
  logs.reserve(comaximal.size());
  for (std::size_t j : comaximal) {
    const double c = dot(base, p.points[j].coords);
    std::vector<double> u(base.size());
    double norm2 = 0.0;
    for (std::size_t t = 0; t < base.size(); ++t) {
      u[t] = p.points[j].coords[t] - c * base[t];
      norm2 += u[t] * u[t];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : u) x *= inv;
    logs.push_back(std::move(u));
  }
  const auto dirs = tangent_directions(tangent_basis(base), dir_samples);
  for (const auto& v : dirs) {
    bool opposed = false;
    for (const auto& u : logs) {
      if (dot(v, u) >= -kTolMetric) {
        opposed = true;
        break;
      }
    }
    if (!opposed) return false;
  }
  return true;
}

bool is_held_local_max(const SphereConfig& p, std::size_t i, int nbhd_samples,
                       double radius) {
  if (!p.antipodal_free())
    throw PreconditionError("is_held_local_max requires antipodal-free input");
  const SpherePoint anti = negate(p.points[i]);
  double d0 = std::numeric_limits<double>::infinity();
  for (const auto& q : p.points) d0 = std::min(d0, geo(anti, q));
  const double tol = 2.0 * radius * radius + 1e-9;
  const auto dirs = tangent_directions(tangent_basis(anti.coords), nbhd_samples);
  for (const auto& w : dirs) {
    std::vector<double> x(anti.coords.size());
    for (std::size_t t = 0; t < x.size(); ++t)
      x[t] = std::cos(radius) * anti.coords[t] + std::sin(radius) * w[t];
    const SpherePoint probe = SpherePoint::normalized(std::move(x));
    double d = std::numeric_limits<double>::infinity();
    for (const auto& q : p.points) d = std::min(d, geo(probe, q));
    if (d > d0 + tol) return false;
  }
  return true;
}

bool is_pointwise_extremal(const SphereConfig& p, int dir_samples) {
  if (!p.antipodal_free())
    throw PreconditionError("pointwise extremality requires antipodal-free input");
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!is_held(p, i, dir_samples)) return false;
  return true;
}

AdmissibleReport admissible_check(const SphereConfig& p,
                                  const SphereSampleGrid& grid,
                                  std::uint64_t seed) {
  if (grid.sample.empty()) throw PreconditionError("empty grid");
  if (grid.antipode.size() != grid.sample.size())
    throw PreconditionError("grid is not antipodally closed");
  AdmissibleReport report;
  report.half_diam = 0.5 * config_diameter(p);
  report.tol = 3.0 * grid.max_nn_spacing;

  std::vector<double> dist_to_p(grid.sample.size());
  for (std::size_t t = 0; t < grid.sample.size(); ++t) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& q : p.points) d = std::min(d, geo(grid.sample[t], q));
    dist_to_p[t] = d;
  }
  for (std::size_t t = 0; t < grid.sample.size(); ++t) {
    const double sum = dist_to_p[t] + dist_to_p[grid.antipode[t]] +
                       2.0 * report.half_diam;
    report.max_residual = std::max(report.max_residual, std::abs(sum - kPi));
  }

  Rng rng(seed);
  const std::size_t pairs = 2000;
  for (std::size_t t = 0; t < pairs; ++t) {
    const std::size_t a = rng.uniform_index(grid.sample.size());
    const std::size_t b = rng.uniform_index(grid.sample.size());
    if (a == b) continue;
    const double d = geo(grid.sample[a], grid.sample[b]);
    if (std::abs(dist_to_p[a] - dist_to_p[b]) > d + kTolMetric)
      report.lipschitz_ok = false;
  }
  report.pass = report.lipschitz_ok && report.max_residual <= report.tol;
  return report;
}

SphereConfig regular_gon(int vertices) {
  if (vertices < 2) throw PreconditionError("need at least two vertices");
  std::vector<SpherePoint> pts;
  pts.reserve(static_cast<std::size_t>(vertices));
  for (int k = 0; k < vertices; ++k) {
    const double a = 2.0 * kPi * k / vertices;
    pts.push_back(SpherePoint{{std::cos(a), std::sin(a)}});
  }
  return SphereConfig::create(std::move(pts));
}

SphereConfig build_P_mn(int m, int n, int resolution) {
  if (m < 1 || n < 1) throw PreconditionError("build_P_mn requires m, n >= 1");
  if (n == 1) return regular_gon(2 * m + 1);
  if (n > 3)
    throw PreconditionError("build_P_mn sampling implemented for n <= 3");
  std::vector<double> polar;  // Q_m = {2k pi/(2m+1)} intersected with [0, pi]
  for (int k = 0; k <= m; ++k) polar.push_back(2.0 * kPi * k / (2 * m + 1));

  std::vector<SpherePoint> pts;
  for (double q : polar) {
    if (q == 0.0) {
      std::vector<double> pole(static_cast<std::size_t>(n) + 1, 0.0);
      pole[0] = 1.0;
      pts.push_back(SpherePoint{std::move(pole)});
      continue;
    }
    const double s = std::sin(q), c = std::cos(q);
    if (n == 2) {
      // Latitude circle; even count keeps exact opposite-azimuth pairs.
      std::size_t count = std::max<std::size_t>(
          16, static_cast<std::size_t>(std::lround(resolution * s)));
      if (count % 2 != 0) ++count;
      for (std::size_t j = 0; j < count; ++j) {
        const double a = 2.0 * kPi * static_cast<double>(j) / count;
        pts.push_back(SpherePoint{{c, s * std::cos(a), s * std::sin(a)}});
      }
    } else {
      // Latitude 2-sphere sampled by a Fibonacci lattice.
      const double target = s * resolution;
      const std::size_t count = std::max<std::size_t>(
          64, static_cast<std::size_t>(std::lround(target * target)));
      const double golden = kPi * (3.0 - std::sqrt(5.0));
      for (std::size_t j = 0; j < count; ++j) {
        const double y = 1.0 - 2.0 * (j + 0.5) / count;
        const double rad = std::sqrt(std::max(0.0, 1.0 - y * y));
        const double a = golden * static_cast<double>(j);
        pts.push_back(SpherePoint{
            {c, s * rad * std::cos(a), s * y, s * rad * std::sin(a)}});
      }
    }
  }
  return SphereConfig::create(std::move(pts));
}

RevolvedReport revolved_admissibility_check(const SphereConfig& p,
                                            const SpherePoint& axis,
                                            const SphereSampleGrid& grid,
                                            std::uint64_t seed) {
  const std::size_t d = p.ambient_dim();
  if (axis.dim() != d) throw PreconditionError("axis dimension mismatch");

  // Latitude structure relative to the axis; singleton latitudes (the poles)
  // must be fixed points of every rotation.
  std::vector<double> lat(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    lat[i] = dot(axis.coords, p.points[i].coords);
  double orbit_spacing = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double nn = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < p.size(); ++j)
      if (j != i && std::abs(lat[i] - lat[j]) <= 1e-9)
        nn = std::min(nn, geo(p.points[i], p.points[j]));
    if (std::isfinite(nn)) orbit_spacing = std::max(orbit_spacing, nn);
  }
  const double tol_sym = orbit_spacing + 1e-9;

  const auto basis = tangent_basis(axis.coords);
  Rng rng(seed);
  for (int trial = 0; trial < 5; ++trial) {
    // Plane rotation within the axis complement.
    const std::size_t a = trial % basis.size();
    const std::size_t b = (a + 1) % basis.size();
    const double ang = rng.uniform(0.3, 2.0 * kPi - 0.3);
    for (const auto& q : p.points) {
      const double qa = dot(q.coords, basis[a]);
      const double qb = dot(q.coords, basis[b]);
      std::vector<double> rotated(q.coords);
      const double ra = qa * std::cos(ang) - qb * std::sin(ang);
      const double rb = qa * std::sin(ang) + qb * std::cos(ang);
      for (std::size_t t = 0; t < d; ++t)
        rotated[t] += (ra - qa) * basis[a][t] + (rb - qb) * basis[b][t];
      const SpherePoint rp = SpherePoint::normalized(std::move(rotated));
      double nn = std::numeric_limits<double>::infinity();
      for (const auto& other : p.points) nn = std::min(nn, geo(rp, other));
      if (nn > tol_sym)
        throw PreconditionError(
            "configuration is not rotation invariant about the axis");
    }
  }

  RevolvedReport report;
  report.sum_report = admissible_check(p, grid, seed);
  report.admissible = report.sum_report.pass;

  // Slice-reduction identity on sampled grid points away from the axis.
  const double band = 0.5 * orbit_spacing + 1e-9;
  const double tol_slice = 2.0 * orbit_spacing + 1e-9;
  report.slice_identity_ok = true;
  std::size_t tested = 0;
  for (std::size_t t = 0; t < grid.sample.size() && tested < 200; ++t) {
    const std::size_t idx = rng.uniform_index(grid.sample.size());
    const auto& x = grid.sample[idx];
    const double xa = dot(x.coords, axis.coords);
    if (std::abs(xa) > 0.98) continue;  // slice ill-conditioned near the poles
    // Orthonormal basis of the slice plane span(axis, x).
    std::vector<double> bvec(d);
    double norm2 = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
      bvec[c] = x.coords[c] - xa * axis.coords[c];
      norm2 += bvec[c] * bvec[c];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& v : bvec) v *= inv;

    double d_full = std::numeric_limits<double>::infinity();
    double d_slice = std::numeric_limits<double>::infinity();
    for (const auto& q : p.points) {
      const double dist = geo(x, q);
      d_full = std::min(d_full, dist);
      const double qa = dot(q.coords, axis.coords);
      const double qb = dot(q.coords, bvec);
      double off2 = 0.0;
      for (std::size_t c = 0; c < d; ++c) {
        const double res = q.coords[c] - qa * axis.coords[c] - qb * bvec[c];
        off2 += res * res;
      }
      if (std::sqrt(off2) <= band) d_slice = std::min(d_slice, dist);
    }
    ++tested;
    const double residual =
        std::isfinite(d_slice) ? d_slice - d_full
                               : std::numeric_limits<double>::infinity();
    report.worst_slice_residual =
        std::max(report.worst_slice_residual, residual);
    if (!(residual <= tol_slice)) report.slice_identity_ok = false;
  }
  return report;
}

}  // namespace tightspan::mountain
