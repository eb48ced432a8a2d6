#include "tightspan/linf_span.hpp"

#include <algorithm>
#include <cmath>

#include "tightspan/errors.hpp"
#include "tightspan/rng.hpp"

namespace tightspan::linf {

namespace {

double cone_deficit(const Cone& c, const LinfPoint& z) {
  // d_inf(z, base) - xi (z_axis - base_axis); zero exactly on the cone.
  const double axial =
      c.sign * (z.coords[c.axis] - c.base.coords[c.axis]);
  return linf_dist(z, c.base) - axial;
}

void require_dim(const Cone& c, const LinfPoint& z) {
  if (c.base.dim() != z.dim()) throw PreconditionError("dimension mismatch");
  if (c.axis >= c.base.dim()) throw PreconditionError("cone axis out of range");
  if (c.sign != 1 && c.sign != -1) throw PreconditionError("cone sign must be +-1");
}

double nn_spacing(const std::vector<LinfPoint>& pts) {
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double nn = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) nn = std::min(nn, linf_dist(pts[i], pts[j]));
    worst = std::max(worst, nn);
  }
  return pts.size() > 1 ? worst : 0.0;
}

}  // namespace

bool in_cone(const Cone& c, const LinfPoint& z, double tol) {
  require_dim(c, z);
  return cone_deficit(c, z) <= tol;
}

bool in_cone_interior(const Cone& c, const LinfPoint& z, double margin) {
  require_dim(c, z);
  const double axial = c.sign * (z.coords[c.axis] - c.base.coords[c.axis]);
  if (axial <= margin) return false;
  for (std::size_t j = 0; j < z.dim(); ++j) {
    if (j == c.axis) continue;
    if (axial - std::abs(z.coords[j] - c.base.coords[j]) <= margin)
      return false;
  }
  return true;
}

bool in_interval(const LinfPoint& x, const LinfPoint& y, const LinfPoint& z,
                 double tol) {
  return std::abs(linf_dist(x, z) + linf_dist(z, y) - linf_dist(x, y)) <= tol;
}

bool interval_decomposition_check(const LinfPoint& x, const LinfPoint& y,
                                  const std::vector<LinfPoint>& probes,
                                  double tol) {
  if (x.dim() != y.dim()) throw PreconditionError("dimension mismatch");
  // The maximizing coordinate gives y in x + xi Lambda_i.
  std::size_t axis = 0;
  double best = -1.0;
  int sign = 1;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double gap = std::abs(y.coords[i] - x.coords[i]);
    if (gap > best) {
      best = gap;
      axis = i;
      sign = y.coords[i] >= x.coords[i] ? 1 : -1;
    }
  }
  const Cone from_x{x, axis, sign};
  const Cone from_y{y, axis, -sign};
  for (const auto& z : probes) {
    const bool lhs = in_interval(x, y, z, tol);
    const bool rhs = in_cone(from_x, z, tol) && in_cone(from_y, z, tol);
    if (lhs != rhs) return false;
  }
  return true;
}

SampledLinfSet SampledLinfSet::from_points(std::vector<LinfPoint> points) {
  if (points.empty()) throw PreconditionError("empty sampled set");
  const std::size_t d = points.front().dim();
  for (const auto& p : points) {
    if (p.dim() != d) throw PreconditionError("mixed dimensions");
    for (double c : p.coords)
      if (!std::isfinite(c)) throw PreconditionError("non-finite coordinate");
  }
  SampledLinfSet s;
  s.points = std::move(points);
  s.spacing = nn_spacing(s.points);
  return s;
}

SampledLinfSet sample_sphere(std::size_t dim, std::size_t count,
                             std::uint64_t seed) {
  if (dim < 2) throw PreconditionError("sphere sample needs dim >= 2");
  Rng rng(seed);
  std::vector<LinfPoint> pts;
  pts.reserve(count);
  for (std::size_t t = 0; t < count; ++t)
    pts.push_back(LinfPoint{rng.unit_vector(dim)});
  auto s = SampledLinfSet::from_points(std::move(pts));
  s.sphere = SphereShape{LinfPoint{std::vector<double>(dim, 0.0)}, 1.0};
  return s;
}

SampledLinfSet sample_ball(std::size_t dim, std::size_t count,
                           std::uint64_t seed) {
  if (dim < 2) throw PreconditionError("ball sample needs dim >= 2");
  Rng rng(seed);
  std::vector<LinfPoint> pts;
  pts.reserve(count);
  while (pts.size() < count) {
    std::vector<double> v(dim);
    double norm2 = 0.0;
    for (auto& c : v) {
      c = rng.uniform(-1.0, 1.0);
      norm2 += c * c;
    }
    if (norm2 <= 1.0) pts.push_back(LinfPoint{std::move(v)});
  }
  auto s = SampledLinfSet::from_points(std::move(pts));
  s.ball = BallShape{LinfPoint{std::vector<double>(dim, 0.0)}, 1.0};
  return s;
}

SampledLinfSet sample_box(std::size_t dim, std::size_t count,
                          std::uint64_t seed) {
  if (dim < 1) throw PreconditionError("box sample needs dim >= 1");
  Rng rng(seed);
  std::vector<LinfPoint> pts;
  pts.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<double> v(dim);
    for (auto& c : v) c = rng.uniform(-1.0, 1.0);
    pts.push_back(LinfPoint{std::move(v)});
  }
  auto s = SampledLinfSet::from_points(std::move(pts));
  s.box = BoxShape{LinfPoint{std::vector<double>(dim, -1.0)},
                   LinfPoint{std::vector<double>(dim, 1.0)}};
  return s;
}

SampledLinfSet segment_plus_apex(std::size_t segment_count) {
  if (segment_count < 2) throw PreconditionError("segment needs >= 2 samples");
  std::vector<LinfPoint> pts;
  pts.reserve(segment_count + 1);
  for (std::size_t t = 0; t < segment_count; ++t) {
    const double u = -1.0 + 2.0 * static_cast<double>(t) /
                                static_cast<double>(segment_count - 1);
    pts.push_back(LinfPoint{{u, 0.0}});
  }
  pts.push_back(LinfPoint{{0.0, 3.0}});
  auto s = SampledLinfSet::from_points(std::move(pts));
  // The apex is exact, so the sampling density is the segment step; the
  // nearest-neighbour proxy would report the apex's 3.0 gap instead.
  s.spacing = 2.0 / static_cast<double>(segment_count - 1);
  return s;
}

LinfPoint project_onto_cone(const Cone& c, const LinfPoint& target,
                            const DykstraOptions& opt) {
  require_dim(c, target);
  const std::size_t d = target.dim();
  // Half-space description a.z <= b of the cone:
  //   +- (z_j - base_j) <= xi (z_axis - base_axis)  for j != axis
  //            0        <= xi (z_axis - base_axis)
  struct HalfSpace {
    std::vector<double> a;
    double b;
    double norm2;
  };
  std::vector<HalfSpace> planes;
  planes.reserve(2 * d - 1);
  const double xi = static_cast<double>(c.sign);
  for (std::size_t j = 0; j < d; ++j) {
    if (j == c.axis) continue;
    for (int s : {1, -1}) {
      HalfSpace h;
      h.a.assign(d, 0.0);
      h.a[j] = s;
      h.a[c.axis] = -xi;
      h.b = s * c.base.coords[j] - xi * c.base.coords[c.axis];
      h.norm2 = 2.0;
      planes.push_back(std::move(h));
    }
  }
  {
    HalfSpace h;
    h.a.assign(d, 0.0);
    h.a[c.axis] = -xi;
    h.b = -xi * c.base.coords[c.axis];
    h.norm2 = 1.0;
    planes.push_back(std::move(h));
  }

  std::vector<double> z = target.coords;
  std::vector<std::vector<double>> increments(planes.size(),
                                              std::vector<double>(d, 0.0));
  std::vector<double> cycle_start(d);
  for (int cycle = 0; cycle < opt.max_cycles; ++cycle) {
    cycle_start = z;
    for (std::size_t k = 0; k < planes.size(); ++k) {
      auto& inc = increments[k];
      const auto& h = planes[k];
      double dotv = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        z[j] += inc[j];  // re-add the previous correction (Dykstra step)
        dotv += h.a[j] * z[j];
      }
      const double violation = std::max(0.0, (dotv - h.b) / h.norm2);
      for (std::size_t j = 0; j < d; ++j) {
        inc[j] = violation * h.a[j];  // part removed this cycle
        z[j] -= inc[j];
      }
    }
    double moved = 0.0;
    for (std::size_t j = 0; j < d; ++j)
      moved = std::max(moved, std::abs(z[j] - cycle_start[j]));
    if (moved < opt.tol) {
      double worst = 0.0;
      for (const auto& h : planes) {
        double dotv = 0.0;
        for (std::size_t j = 0; j < d; ++j) dotv += h.a[j] * z[j];
        worst = std::max(worst, dotv - h.b);
      }
      if (worst <= opt.tol) return LinfPoint{std::move(z)};
    }
  }
  throw ConvergenceError("Dykstra projection did not converge");
}

double cone_min_distance(const Cone& c, const LinfPoint& target,
                         const DykstraOptions& opt) {
  const LinfPoint proj = project_onto_cone(c, target, opt);
  double norm2 = 0.0;
  for (std::size_t j = 0; j < target.dim(); ++j) {
    const double gap = proj.coords[j] - target.coords[j];
    norm2 += gap * gap;
  }
  return std::sqrt(norm2);
}

namespace {

double box_gap(const Cone& c, const BoxShape& box) {
  // Alternating projections between the cone and the box; the limit gap is
  // the distance between the two convex sets.
  const std::size_t d = box.lo.dim();
  std::vector<double> z(d);
  for (std::size_t j = 0; j < d; ++j)
    z[j] = 0.5 * (box.lo.coords[j] + box.hi.coords[j]);
  double gap = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 500; ++it) {
    const LinfPoint on_cone = project_onto_cone(c, LinfPoint{z});
    std::vector<double> clamped(d);
    double g2 = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      clamped[j] =
          std::clamp(on_cone.coords[j], box.lo.coords[j], box.hi.coords[j]);
      const double diff = clamped[j] - on_cone.coords[j];
      g2 += diff * diff;
    }
    const double new_gap = std::sqrt(g2);
    if (std::abs(new_gap - gap) < 1e-10) return new_gap;
    gap = new_gap;
    z = std::move(clamped);
  }
  return gap;
}

}  // namespace

bool cone_set_intersects(const Cone& c, const SampledLinfSet& x, double slack) {
  if (x.sphere) {
    const double tol = slack < 0.0 ? kTolConeExact : slack;
    return cone_min_distance(c, x.sphere->center) <= x.sphere->radius + tol;
  }
  if (x.ball) {
    const double tol = slack < 0.0 ? kTolConeExact : slack;
    return cone_min_distance(c, x.ball->center) <= x.ball->radius + tol;
  }
  if (x.box) {
    const double tol = slack < 0.0 ? kTolConeExact : slack;
    return box_gap(c, *x.box) <= tol;
  }
  const double tol = slack < 0.0 ? x.sampled_tol() : slack;
  for (const auto& s : x.points)
    if (cone_deficit(c, s) <= tol) return true;
  return false;
}

bool is_surrounding(const LinfPoint& p, const SampledLinfSet& x, double slack) {
  const std::size_t d = x.dim();
  if (p.dim() != d) throw PreconditionError("dimension mismatch");
  for (std::size_t i = 0; i < d; ++i)
    for (int sign : {1, -1})
      if (!cone_set_intersects(Cone{p, i, sign}, x, slack)) return false;
  return true;
}

bool is_minimal_point(const LinfPoint& p, const SampledLinfSet& x,
                      double slack) {
  const std::size_t d = x.dim();
  if (p.dim() != d) throw PreconditionError("dimension mismatch");
  if (x.points.empty()) throw PreconditionError("empty sample");
  const double tol = slack < 0.0 ? x.sampled_tol() : slack;

  // Occupancy of each cone at p (exact membership). A sample x in cone
  // (i, xi) pairs with any sample in the mirror cone (i, -xi): the interval
  // identity d(x,p) + d(p,y) = d(x,y) is then exact.
  std::vector<bool> occupied(2 * d, false);
  for (const auto& s : x.points)
    for (std::size_t i = 0; i < d; ++i)
      for (int sign : {1, -1})
        if (!occupied[2 * i + (sign > 0 ? 0 : 1)] &&
            cone_deficit(Cone{p, i, sign}, s) <= 1e-12)
          occupied[2 * i + (sign > 0 ? 0 : 1)] = true;

  for (const auto& sx : x.points) {
    bool paired = false;
    for (std::size_t i = 0; i < d && !paired; ++i)
      for (int sign : {1, -1}) {
        if (cone_deficit(Cone{p, i, sign}, sx) <= 1e-12 &&
            occupied[2 * i + (sign > 0 ? 1 : 0)]) {
          paired = true;
          break;
        }
      }
    if (paired) continue;
    // Fallback: direct search for a geodesic partner within the slack.
    const double dxp = linf_dist(sx, p);
    for (const auto& sy : x.points) {
      if (dxp + linf_dist(p, sy) <= linf_dist(sx, sy) + tol) {
        paired = true;
        break;
      }
    }
    if (!paired) return false;
  }
  return true;
}

bool surrounding_distance_preservation(const LinfPoint& p, const LinfPoint& q,
                                       const SampledLinfSet& x, double tol) {
  if (!is_surrounding(p, x) || !is_surrounding(q, x))
    throw PreconditionError("both points must be X-surrounding");
  if (tol < 0.0) tol = std::max(kTolConeExact, x.sampled_tol());
  double sup = 0.0;
  for (const auto& s : x.points)
    sup = std::max(sup, std::abs(linf_dist(p, s) - linf_dist(q, s)));
  return std::abs(sup - linf_dist(p, q)) <= tol;
}

double witness_lambda_max(int n) {
  if (n < 1) throw PreconditionError("n must be positive");
  return (n + 1) / (2.0 * std::sqrt(static_cast<double>(n))) - 1.0;
}

WitnessResult witness_point(int n, double lambda) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (lambda <= 0.0) throw PreconditionError("lambda must be positive");
  WitnessResult res;
  res.n = n;
  res.lambda = lambda;
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  const double scale = (1.0 + lambda) / std::sqrt(static_cast<double>(dim));
  res.p = LinfPoint{std::vector<double>(dim, scale)};

  res.discriminant = (n - 1.0) * (n - 1.0) * (1.0 + lambda) * (1.0 + lambda) -
                     (n + 1.0) * (n + 1.0) * (lambda * lambda + 2.0 * lambda);
  if (res.discriminant < 0.0) {
    res.reason = "discriminant negative: the cone ray misses the sphere";
    return res;
  }

  // v^i is the unit diagonal with coordinate i flipped; it must sit exactly
  // on the boundary of p - Lambda_i, and p - t v^i on the sphere for the
  // positive root t.
  const double inv = 1.0 / std::sqrt(static_cast<double>(dim));
  // Larger root of t^2 - 2(n-1)(1+lambda)/(n+1) t + (lambda^2 + 2 lambda);
  // res.discriminant carries the scaled form (n+1)^2 (b/2)^2 - (n+1)^2 c.
  res.root = ((n - 1.0) * (1.0 + lambda) + std::sqrt(res.discriminant)) /
             (n + 1.0);
  if (res.root <= 0.0) {
    res.reason = "no positive root";
    return res;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<double> v(dim, inv);
    v[i] = -inv;
    const LinfPoint vi{v};
    if (cone_deficit(Cone{res.p, i, -1}, vi) > 1e-9) {
      res.reason = "v^i fails the negative-cone equality";
      return res;
    }
    double norm2 = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      const double c = res.p.coords[j] - res.root * v[j];
      norm2 += c * c;
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
      res.reason = "positive root does not return to the sphere";
      return res;
    }
  }
  // The witness certifies ||p||_2 = 1 + lambda > 1, hence p is outside D^{n+1}.
  res.valid = true;
  return res;
}

bool mirror_lemma_check(const LinfPoint& p, const SampledLinfSet& x,
                        double margin) {
  if (margin < 0.0) margin = x.sampled_tol();
  if (!is_minimal_point(p, x))
    throw PreconditionError("mirror_lemma_check requires an X-minimal point");
  const std::size_t d = x.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (int sign : {1, -1}) {
      const Cone cone{p, i, sign};
      bool interior_hit = false;
      for (const auto& s : x.points)
        if (in_cone_interior(cone, s, margin)) {
          interior_hit = true;
          break;
        }
      if (!interior_hit) continue;
      if (!cone_set_intersects(Cone{p, i, -sign}, x, margin)) return false;
    }
  return true;
}

CoincidenceReport s2_coincidence_sweep(std::size_t target_accepted,
                                       std::uint64_t seed,
                                       std::size_t sphere_sample) {
  const SampledLinfSet sphere = sample_sphere(3, sphere_sample, seed);
  const double slack = sphere.sampled_tol();
  CoincidenceReport report;
  report.sample_spacing = sphere.spacing;

  Rng rng = Rng::stream(seed, 0xC01Du);
  const std::size_t max_trials = 100 * std::max<std::size_t>(target_accepted, 1);
  while (report.accepted < target_accepted && report.trials < max_trials) {
    ++report.trials;
    LinfPoint cand{std::vector<double>{rng.uniform(-1.0, 1.0),
                                       rng.uniform(-1.0, 1.0),
                                       rng.uniform(-1.0, 1.0)}};
    if (!is_minimal_point(cand, sphere, slack)) continue;
    ++report.accepted;

    bool surrounding = true;
    for (std::size_t i = 0; i < 3; ++i)
      for (int sign : {1, -1}) {
        const double min_dist =
            cone_min_distance(Cone{cand, i, sign}, sphere.sphere->center);
        report.worst_cone_residual = std::max(
            report.worst_cone_residual, min_dist - sphere.sphere->radius);
        if (min_dist > sphere.sphere->radius + slack) surrounding = false;
      }
    if (surrounding) ++report.surrounding_pass;
    if (mirror_lemma_check(cand, sphere, slack)) ++report.mirror_pass;
  }
  return report;
}

bool convexity_sweep(const SampledLinfSet& x, std::size_t trials,
                     std::uint64_t seed) {
  if (!x.ball && !x.box)
    throw PreconditionError("convexity_sweep requires a convex shape tag");
  const std::size_t d = x.dim();
  double lo = -1.0, hi = 1.0;
  if (x.ball) {
    lo = -x.ball->radius - 0.2;
    hi = x.ball->radius + 0.2;
  } else if (x.box) {
    lo = x.box->lo.coords[0] - 0.2;
    hi = x.box->hi.coords[0] + 0.2;
  }
  Rng rng(seed);
  auto draw_surrounding = [&]() -> LinfPoint {
    for (int attempts = 0; attempts < 100000; ++attempts) {
      std::vector<double> v(d);
      for (auto& c : v) c = rng.uniform(lo, hi);
      LinfPoint p{std::move(v)};
      if (is_surrounding(p, x)) return p;
    }
    throw ConvergenceError("could not sample a surrounding point");
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const LinfPoint p = draw_surrounding();
    const LinfPoint q = draw_surrounding();
    std::vector<double> mid(d);
    for (std::size_t j = 0; j < d; ++j)
      mid[j] = 0.5 * (p.coords[j] + q.coords[j]);
    if (!is_surrounding(LinfPoint{std::move(mid)}, x)) return false;
  }
  return true;
}

bool idempotence_probe(const SampledLinfSet& x,
                       const std::vector<LinfPoint>& candidates) {
  std::vector<LinfPoint> minimal;
  for (const auto& c : candidates)
    if (is_minimal_point(c, x)) minimal.push_back(c);
  if (minimal.empty()) return true;
  std::vector<LinfPoint> augmented = x.points;
  augmented.insert(augmented.end(), minimal.begin(), minimal.end());
  SampledLinfSet bigger = SampledLinfSet::from_points(std::move(augmented));
  const double slack = x.sampled_tol();
  for (const auto& c : minimal)
    if (!is_minimal_point(c, bigger, slack)) return false;
  return true;
}

}  // namespace tightspan::linf
