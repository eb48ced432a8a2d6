#include <cmath>
#include <numbers>

#include <doctest.h>

#include "tightspan/errors.hpp"
#include "tightspan/metric_core.hpp"
#include "tightspan/sphere_mountain.hpp"

using namespace tightspan;
namespace mtn = tightspan::mountain;

namespace {
constexpr double pi = std::numbers::pi;

SpherePoint on_circle(double angle) {
  return SpherePoint{{std::cos(angle), std::sin(angle)}};
}

mtn::SphereConfig triangle_with(double value) {
  return mtn::SphereConfig::create(
      {on_circle(0.0), on_circle(2.0 * pi / 3.0), on_circle(4.0 * pi / 3.0)},
      {value, value, value});
}

bool config_diameter_is_two_thirds_pi(const mtn::SphereConfig& c) {
  return std::abs(mtn::config_diameter(c) - 2.0 * pi / 3.0) <= 1e-6;
}
}  // namespace

TEST_CASE("mountain range evaluation") {
  const auto tri = triangle_with(pi / 3.0);
  CHECK(mtn::mr_eval(tri, on_circle(0.0)) == doctest::Approx(pi / 3.0));
  CHECK(mtn::mr_eval(tri, on_circle(pi / 3.0)) ==
        doctest::Approx(2.0 * pi / 3.0));

  const auto single = mtn::SphereConfig::create({on_circle(1.0)}, {0.0});
  CHECK(mtn::mr_eval(single, on_circle(2.5)) == doctest::Approx(1.5));
}

TEST_CASE("MR extends Delta_1 functions exactly") {
  const auto tri = triangle_with(pi / 3.0);
  for (const auto& p : tri.points)
    CHECK(mtn::mr_eval(tri, p) == doctest::Approx(pi / 3.0).epsilon(1e-12));

  // Kuratowski values on a pentagon are 1-Lipschitz, so MR restricts to them.
  auto pent = mtn::regular_gon(5);
  pent.values.resize(5);
  for (std::size_t i = 0; i < 5; ++i)
    pent.values[i] = sphere_dist(pent.points[i], pent.points[0]);
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(std::abs(mtn::mr_eval(pent, pent.points[i]) - pent.values[i]) <=
          1e-12);
}

TEST_CASE("MR lands in Delta_1 on a grid") {
  const auto grid = mtn::circle_grid(500);
  CHECK(mtn::mr_delta1_check(triangle_with(pi / 3.0), grid));
  CHECK_THROWS_AS(mtn::mr_delta1_check(triangle_with(0.0), grid),
                  PreconditionError);

  // The whole grid with v = 0 fails Delta(P) outright.
  auto whole = mtn::SphereConfig::create(
      std::vector<SpherePoint>(grid.sample.begin(), grid.sample.begin() + 64));
  whole.values.assign(whole.size(), 0.0);
  CHECK_THROWS_AS(mtn::mr_delta1_check(whole, grid), PreconditionError);
}

TEST_CASE("admissible configurations are pointwise extremal") {
  const auto grid = mtn::circle_grid(2048);
  for (int m : {1, 2, 3}) {
    const auto gon = mtn::regular_gon(2 * m + 1);
    if (mtn::admissible_check(gon, grid).pass)
      CHECK(mtn::is_pointwise_extremal(gon));
  }
}

TEST_CASE("comaximal points") {
  const auto tri = triangle_with(pi / 3.0);
  CHECK(mtn::comax(tri, 0) == std::vector<std::size_t>{1, 2});
  CHECK(config_diameter_is_two_thirds_pi(tri));
}

TEST_CASE("comaximal points on two-point and pentagon configurations") {
  const auto pair = mtn::SphereConfig::create({on_circle(0.0), on_circle(pi / 2.0)});
  CHECK(mtn::comax(pair, 0) == std::vector<std::size_t>{1});

  const auto pent = mtn::regular_gon(5);
  CHECK(mtn::comax(pent, 0) == std::vector<std::size_t>{2, 3});

  CHECK_THROWS_AS(mtn::comax(mtn::SphereConfig::create({on_circle(0.0)}), 0),
                  PreconditionError);
}

TEST_CASE("held points") {
  const auto tri = triangle_with(pi / 3.0);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(mtn::is_held(tri, i));
    CHECK(mtn::is_held_local_max(tri, i));
  }

  const auto pair = mtn::SphereConfig::create({on_circle(0.0), on_circle(pi / 2.0)});
  CHECK_FALSE(mtn::is_held(pair, 0));
  CHECK_FALSE(mtn::is_held_local_max(pair, 0));

  CHECK_THROWS_AS(mtn::is_held(mtn::regular_gon(4), 0), PreconditionError);
}

TEST_CASE("pointwise extremal configurations") {
  for (int m : {1, 2, 3}) CHECK(mtn::is_pointwise_extremal(mtn::regular_gon(2 * m + 1)));
  const auto pair = mtn::SphereConfig::create({on_circle(0.0), on_circle(pi / 2.0)});
  CHECK_FALSE(mtn::is_pointwise_extremal(pair));

  const auto revolved = mtn::build_P_mn(1, 2, 256);
  CHECK(mtn::is_pointwise_extremal(revolved));
  for (std::size_t i = 0; i < revolved.size(); i += 37)
    CHECK(mtn::is_held_local_max(revolved, i) == mtn::is_held(revolved, i));
}

TEST_CASE("held criteria agree across the corpus") {
  std::vector<mtn::SphereConfig> corpus;
  corpus.push_back(triangle_with(pi / 3.0));
  corpus.push_back(mtn::regular_gon(5));
  corpus.push_back(mtn::regular_gon(7));
  corpus.push_back(
      mtn::SphereConfig::create({on_circle(0.0), on_circle(pi / 2.0)}));
  corpus.push_back(
      mtn::SphereConfig::create({on_circle(0.3), on_circle(1.1), on_circle(4.0)}));
  for (const auto& config : corpus)
    for (std::size_t i = 0; i < config.size(); ++i)
      CHECK(mtn::is_held(config, i, 64) == mtn::is_held_local_max(config, i, 64));
}

TEST_CASE("admissibility on the circle") {
  const auto grid = mtn::circle_grid(2048);
  for (int m : {1, 2, 3}) {
    const auto rep = mtn::admissible_check(mtn::regular_gon(2 * m + 1), grid);
    CHECK(rep.pass);
    CHECK(rep.max_residual <= rep.tol);
  }
  const auto square = mtn::admissible_check(mtn::regular_gon(4), grid);
  CHECK_FALSE(square.pass);
  CHECK(square.max_residual >= pi / 2.0 - square.tol);
}

TEST_CASE("revolved configurations are admissible") {
  const auto grid = mtn::fibonacci_grid(600);
  const auto p12 = mtn::build_P_mn(1, 2, 800);
  const auto rep = mtn::admissible_check(p12, grid);
  CHECK(rep.pass);

  const SpherePoint pole{{1.0, 0.0, 0.0}};
  const auto revolved = mtn::revolved_admissibility_check(p12, pole, grid, 1);
  CHECK(revolved.admissible);
  CHECK(revolved.slice_identity_ok);

  const auto p22 = mtn::build_P_mn(2, 2, 800);
  const auto revolved22 = mtn::revolved_admissibility_check(p22, pole, grid, 1);
  CHECK(revolved22.admissible);
  CHECK(revolved22.slice_identity_ok);

  // A latitude circle without its pole is symmetric but not admissible.
  std::vector<SpherePoint> latitude;
  for (int j = 0; j < 256; ++j) {
    const double a = 2.0 * pi * j / 256.0;
    const double q = 2.0 * pi / 3.0;
    latitude.push_back(SpherePoint{
        {std::cos(q), std::sin(q) * std::cos(a), std::sin(q) * std::sin(a)}});
  }
  const auto lonely = mtn::SphereConfig::create(std::move(latitude));
  const auto bad = mtn::revolved_admissibility_check(lonely, pole, grid, 1);
  CHECK_FALSE(bad.admissible);

  // Dropping a quarter of the latitude circle breaks rotation invariance.
  auto broken_pts = p12.points;
  broken_pts.resize(broken_pts.size() - broken_pts.size() / 4);
  const auto broken = mtn::SphereConfig::create(std::move(broken_pts));
  CHECK_THROWS_AS(mtn::revolved_admissibility_check(broken, pole, grid, 1),
                  PreconditionError);
}

TEST_CASE("build_P_mn structure") {
  const auto gon = mtn::build_P_mn(1, 1, 0);
  CHECK(gon.size() == 3);

  const auto p12 = mtn::build_P_mn(1, 2, 300);
  bool has_pole = false;
  for (const auto& p : p12.points) {
    if (std::abs(p.coords[0] - 1.0) <= 1e-12) {
      has_pole = true;
    } else {
      CHECK(p.coords[0] ==
            doctest::Approx(std::cos(2.0 * pi / 3.0)).epsilon(1e-9));
    }
  }
  CHECK(has_pole);

  const auto p22 = mtn::build_P_mn(2, 2, 300);
  for (const auto& p : p22.points) {
    const bool ok = std::abs(p.coords[0] - 1.0) <= 1e-9 ||
                    std::abs(p.coords[0] - std::cos(2.0 * pi / 5.0)) <= 1e-9 ||
                    std::abs(p.coords[0] - std::cos(4.0 * pi / 5.0)) <= 1e-9;
    CHECK(ok);
  }

  CHECK(config_diameter_is_two_thirds_pi(mtn::build_P_mn(1, 2, 300)));
}

TEST_CASE("antipodal pairs defeat finite admissibility") {
  const auto grid = mtn::circle_grid(2048);
  // Any finite configuration containing antipodes has diameter pi and fails
  // the sum test away from the configuration.
  const auto square = mtn::regular_gon(4);
  CHECK(mtn::config_diameter(square) == doctest::Approx(pi));
  CHECK_FALSE(mtn::admissible_check(square, grid).pass);
}
