#include <cmath>

#include <doctest.h>

#include "tightspan/errors.hpp"
#include "tightspan/linf_span.hpp"
#include "tightspan/rng.hpp"

using namespace tightspan;
namespace tl = tightspan::linf;

TEST_CASE("cone membership") {
  const LinfPoint origin{{0.0, 0.0}};
  CHECK(tl::in_cone(tl::Cone{origin, 0, 1}, LinfPoint{{2.0, 1.0}}));
  CHECK_FALSE(tl::in_cone(tl::Cone{origin, 0, 1}, LinfPoint{{1.0, 2.0}}));
  const LinfPoint p{{0.7, -1.2}};
  for (std::size_t i = 0; i < 2; ++i)
    for (int s : {1, -1}) CHECK(tl::in_cone(tl::Cone{p, i, s}, p));
}

TEST_CASE("metric intervals") {
  const LinfPoint x{{0.0, 3.0}}, y{{0.0, -1.0}};
  CHECK(tl::in_interval(x, y, x));
  CHECK(tl::in_interval(x, y, y));
  CHECK(tl::in_interval(x, y, LinfPoint{{0.0, 2.0}}));
  CHECK_FALSE(tl::in_interval(LinfPoint{{0.0, 0.0}}, LinfPoint{{2.0, 0.0}},
                              LinfPoint{{1.0, 5.0}}));
}

TEST_CASE("interval decomposition over probes") {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> xc(3), yc(3);
    for (auto& c : xc) c = rng.uniform(-2.0, 2.0);
    for (auto& c : yc) c = rng.uniform(-2.0, 2.0);
    const LinfPoint x{xc}, y{yc};
    std::vector<LinfPoint> probes;
    for (int q = 0; q < 30; ++q) {
      std::vector<double> zc(3);
      for (auto& c : zc) c = rng.uniform(-4.0, 4.0);
      probes.push_back(LinfPoint{std::move(zc)});
    }
    for (const double lam : {0.0, 0.25, 0.5, 1.0}) {
      std::vector<double> zc(3);
      for (int j = 0; j < 3; ++j) zc[j] = (1 - lam) * xc[j] + lam * yc[j];
      probes.push_back(LinfPoint{std::move(zc)});
    }
    probes.push_back(LinfPoint{{50.0, 50.0, 50.0}});  // far: both sides false
    CHECK(tl::interval_decomposition_check(x, y, probes));
  }
}

TEST_CASE("cone partition and transitivity") {
  Rng rng(5);
  for (int t = 0; t < 2000; ++t) {
    std::vector<double> pc(3), zc(3);
    for (auto& c : pc) c = rng.uniform(-5.0, 5.0);
    for (auto& c : zc) c = rng.uniform(-5.0, 5.0);
    const LinfPoint p{pc}, z{zc};
    bool covered = linf_dist(p, z) == 0.0;
    for (std::size_t i = 0; i < 3 && !covered; ++i)
      for (int s : {1, -1})
        if (tl::in_cone(tl::Cone{p, i, s}, z, 1e-9)) covered = true;
    CHECK(covered);
  }
}

TEST_CASE("Dykstra projection onto cones") {
  const tl::Cone away{LinfPoint{{2.0, 0.0, 0.0}}, 0, 1};
  CHECK(tl::cone_min_distance(away, LinfPoint{{0.0, 0.0, 0.0}}) ==
        doctest::Approx(2.0).epsilon(1e-6));
  const tl::Cone at_origin{LinfPoint{{0.0, 0.0, 0.0}}, 0, 1};
  CHECK(tl::cone_min_distance(at_origin, LinfPoint{{0.0, 0.0, 0.0}}) <= 1e-9);
  // Projection of a point already in the cone is itself.
  const LinfPoint inside{{3.0, 1.0, -1.0}};
  CHECK(linf_dist(tl::project_onto_cone(at_origin, inside), inside) <= 1e-9);
}

TEST_CASE("cone-set intersections") {
  const auto sphere = tl::sample_sphere(3, 500, 1);
  const LinfPoint origin{{0.0, 0.0, 0.0}};
  for (std::size_t i = 0; i < 3; ++i)
    for (int s : {1, -1})
      CHECK(tl::cone_set_intersects(tl::Cone{origin, i, s}, sphere));

  const auto planar = tl::segment_plus_apex(200);
  CHECK_FALSE(tl::cone_set_intersects(tl::Cone{LinfPoint{{0.0, 2.0}}, 0, 1},
                                      planar, 1e-9));

  // Unit box corners: a point past the face cannot reach any corner.
  std::vector<LinfPoint> corners;
  for (int mask = 0; mask < 8; ++mask)
    corners.push_back(LinfPoint{{mask & 1 ? 1.0 : -1.0,
                                 mask & 2 ? 1.0 : -1.0,
                                 mask & 4 ? 1.0 : -1.0}});
  const auto corner_set = tl::SampledLinfSet::from_points(std::move(corners));
  CHECK_FALSE(tl::cone_set_intersects(
      tl::Cone{LinfPoint{{1.5, 0.3, 0.2}}, 0, 1}, corner_set, 1e-9));
}

TEST_CASE("surrounding points") {
  const auto circle = tl::sample_sphere(2, 2000, 2);
  CHECK(tl::is_surrounding(circle.points.front(), circle));
  CHECK(tl::is_surrounding(LinfPoint{{0.0, 0.0}}, circle));

  const auto planar = tl::segment_plus_apex(200);
  CHECK_FALSE(tl::is_surrounding(LinfPoint{{0.0, 2.0}}, planar));

  const auto ball = tl::sample_ball(3, 500, 3);
  CHECK(tl::is_surrounding(LinfPoint{{0.0, 0.0, 0.0}}, ball));
}

TEST_CASE("minimal points") {
  const auto planar = tl::segment_plus_apex(200);
  CHECK(tl::is_minimal_point(planar.points.front(), planar));
  CHECK(tl::is_minimal_point(LinfPoint{{0.0, 2.0}}, planar));

  const auto two = tl::SampledLinfSet::from_points(
      {LinfPoint{{0.0, 0.0}}, LinfPoint{{1.0, 0.0}}});
  CHECK_FALSE(tl::is_minimal_point(LinfPoint{{3.0, 5.0}}, two));
}

TEST_CASE("interval nesting") {
  Rng rng(7);
  int tested = 0;
  while (tested < 200) {
    std::vector<double> xc(3), yc(3);
    for (auto& c : xc) c = rng.uniform(-2.0, 2.0);
    for (auto& c : yc) c = rng.uniform(-2.0, 2.0);
    const LinfPoint x{xc}, y{yc};
    auto draw_between = [&](const LinfPoint& a, const LinfPoint& b,
                            LinfPoint& out) {
      for (int tries = 0; tries < 100; ++tries) {
        std::vector<double> zc(3);
        for (int j = 0; j < 3; ++j)
          zc[j] = rng.uniform(std::min(a.coords[j], b.coords[j]) - 0.5,
                              std::max(a.coords[j], b.coords[j]) + 0.5);
        LinfPoint z{zc};
        if (tl::in_interval(a, b, z, 1e-12)) {
          out = z;
          return true;
        }
      }
      return false;
    };
    LinfPoint z{{0, 0, 0}}, w{{0, 0, 0}};
    if (!draw_between(x, y, z) || !draw_between(x, z, w)) continue;
    ++tested;
    CHECK(tl::in_interval(x, y, w, 1e-9));
  }
}

TEST_CASE("surrounding distance preservation") {
  const auto circle = tl::sample_sphere(2, 3000, 11);
  Rng rng(13);
  int tested = 0;
  while (tested < 20) {
    LinfPoint p{{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}};
    LinfPoint q{{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}};
    if (!tl::is_surrounding(p, circle) || !tl::is_surrounding(q, circle))
      continue;
    ++tested;
    CHECK(tl::surrounding_distance_preservation(p, q, circle));
    CHECK(tl::surrounding_distance_preservation(p, p, circle));
    // Surrounding implies minimal, and surrounding points stay in the
    // bounding box of X.
    CHECK(tl::is_minimal_point(p, circle));
    for (double c : p.coords) CHECK(std::abs(c) <= 1.0 + circle.spacing);
  }

  const auto ball = tl::sample_ball(3, 800, 11);
  tested = 0;
  while (tested < 10) {
    LinfPoint p{{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                 rng.uniform(-1.0, 1.0)}};
    LinfPoint q{{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                 rng.uniform(-1.0, 1.0)}};
    if (!tl::is_surrounding(p, ball) || !tl::is_surrounding(q, ball)) continue;
    ++tested;
    CHECK(tl::surrounding_distance_preservation(p, q, ball));
    CHECK(tl::is_minimal_point(p, ball));
  }
}

TEST_CASE("open-ball points are minimal and surrounding for the sphere") {
  const auto sphere = tl::sample_sphere(3, 2000, 43);
  Rng rng(47);
  int tested = 0;
  while (tested < 25) {
    std::vector<double> v(3);
    double norm2 = 0.0;
    for (auto& c : v) {
      c = rng.uniform(-1.0, 1.0);
      norm2 += c * c;
    }
    if (norm2 >= 0.96) continue;  // stay inside the open ball
    ++tested;
    const LinfPoint p{std::move(v)};
    CHECK(tl::is_minimal_point(p, sphere));
    CHECK(tl::is_surrounding(p, sphere));
  }
}

TEST_CASE("witness verdicts") {
  const auto valid = tl::witness_point(2, 0.05);
  CHECK(valid.valid);
  CHECK(valid.discriminant > 0.0);
  CHECK(valid.p.coords.size() == 3);

  const auto flat = tl::witness_point(1, 0.05);
  CHECK_FALSE(flat.valid);

  const auto too_far = tl::witness_point(2, 0.07);
  CHECK_FALSE(too_far.valid);
  CHECK(too_far.discriminant < 0.0);

  for (int n = 2; n <= 5; ++n) {
    const double lmax = tl::witness_lambda_max(n);
    CHECK(tl::witness_point(n, 0.9 * lmax).valid);
    CHECK_FALSE(tl::witness_point(n, 1.1 * lmax).valid);
  }
  for (const double lam : {0.01, 0.05, 0.2})
    CHECK_FALSE(tl::witness_point(1, lam).valid);
}

TEST_CASE("witnesses are minimal and surrounding") {
  const auto wit = tl::witness_point(2, 0.05);
  REQUIRE(wit.valid);
  const auto sphere = tl::sample_sphere(3, 3000, 17);
  CHECK(tl::is_minimal_point(wit.p, sphere));
  CHECK(tl::is_surrounding(wit.p, sphere));
}

TEST_CASE("mirror lemma") {
  const auto sphere = tl::sample_sphere(3, 1500, 19);
  CHECK(tl::mirror_lemma_check(LinfPoint{{0.0, 0.0, 0.0}}, sphere));

  const auto planar = tl::segment_plus_apex(200);
  CHECK(tl::mirror_lemma_check(LinfPoint{{0.0, 2.0}}, planar));

  Rng rng(23);
  int tested = 0;
  while (tested < 20) {
    LinfPoint p{{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                 rng.uniform(-1.0, 1.0)}};
    if (!tl::is_minimal_point(p, sphere)) continue;
    ++tested;
    CHECK(tl::mirror_lemma_check(p, sphere));
  }
}

TEST_CASE("convexity sweeps") {
  CHECK(tl::convexity_sweep(tl::sample_ball(3, 400, 29), 20, 31));
  CHECK(tl::convexity_sweep(tl::sample_box(3, 400, 29), 20, 31));
  CHECK_THROWS_AS(tl::convexity_sweep(tl::segment_plus_apex(50), 5, 1),
                  PreconditionError);
}

TEST_CASE("idempotence probe") {
  const auto planar = tl::segment_plus_apex(200);
  CHECK(tl::idempotence_probe(planar, planar.points));

  Rng rng(37);
  std::vector<LinfPoint> candidates;
  while (candidates.size() < 100) {
    LinfPoint p{{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 3.5)}};
    if (tl::is_minimal_point(p, planar)) candidates.push_back(p);
  }
  // A deliberately non-minimal candidate is filtered, not fatal.
  candidates.push_back(LinfPoint{{50.0, 50.0}});
  CHECK(tl::idempotence_probe(planar, candidates));
}

TEST_CASE("coincidence sweep smoke") {
  const auto report = tl::s2_coincidence_sweep(40, 41, 1500);
  CHECK(report.accepted == 40);
  CHECK(report.surrounding_pass == 40);
  CHECK(report.mirror_pass == 40);
}
