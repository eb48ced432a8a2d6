#include <cmath>
#include <numbers>

#include <doctest.h>

#include "tightspan/errors.hpp"
#include "tightspan/json_io.hpp"

using namespace tightspan;

TEST_CASE("metric space JSON round trip") {
  const auto x = FiniteMetricSpace::create(
      {"a", "b", "c"},
      {{0.0, 1.0, 1.5}, {1.0, 0.0, 2.0}, {1.5, 2.0, 0.0}});
  const auto j = io::metric_space_to_json(x);
  const auto back = io::metric_space_from_json(j);
  CHECK(back.labels == x.labels);
  CHECK(back.dist == x.dist);
}

TEST_CASE("metric space schema violations") {
  CHECK_THROWS_AS(io::metric_space_from_json(nlohmann::json{{"labels", {"a"}}}),
                  SchemaError);
  CHECK_THROWS_AS(io::metric_space_from_json(nlohmann::json{
                      {"dist", {{0.0, 1.0}, {2.0, 0.0}}}}),
                  SchemaError);
  CHECK_THROWS_AS(io::metric_space_from_json(nlohmann::json{
                      {"dist", {{0.0, 1.0}}}}),
                  SchemaError);
}

TEST_CASE("grid function JSON round trip") {
  const std::size_t n = 90;
  const auto f = circle::kuratowski_grid(n, 1.0);
  const auto back = io::grid_function_from_json(io::grid_function_to_json(f));
  CHECK(back.n_cells() == n);
  CHECK(circle::sup_dist(f, back) <= 1e-12);
  CHECK_THROWS_AS(io::grid_function_from_json(nlohmann::json{
                      {"n_cells", 4}, {"values", {0.0, 1.0}}}),
                  SchemaError);
}

TEST_CASE("interval subset JSON") {
  const auto a = io::interval_subset_from_json(
      nlohmann::json{{"intervals", {{0.0, 0.5}, {1.0, 2.0}}}});
  CHECK(a.measure() == doctest::Approx(1.5));
  // Overlapping intervals are rejected.
  CHECK_THROWS_AS(io::interval_subset_from_json(
                      nlohmann::json{{"intervals", {{0.0, 1.5}, {1.0, 2.0}}}}),
                  SchemaError);
}

TEST_CASE("file loading errors") {
  CHECK_THROWS_AS(io::load_json("/nonexistent/path.json"), IoError);
}
