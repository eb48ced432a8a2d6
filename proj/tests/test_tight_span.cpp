#include <bit>
#include <cmath>

#include <doctest.h>

#include "tightspan/errors.hpp"
#include "tightspan/rng.hpp"
#include "tightspan/tight_span.hpp"
#include "test_helpers.hpp"

using namespace tightspan;
using span::RadiusFunction;

namespace {

RadiusFunction random_delta(Rng& rng, const FiniteMetricSpace& x) {
  RadiusFunction f(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double ecc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) ecc = std::max(ecc, x.d(i, j));
    f[i] = ecc * rng.uniform(0.6, 1.4);
  }
  REQUIRE(span::in_delta(x, f));
  return f;
}

}  // namespace

TEST_CASE("Delta membership") {
  const auto c4 = span::circular_space(2);
  CHECK(span::in_delta(c4, span::kuratowski(c4, std::size_t{0})));
  const auto two = FiniteMetricSpace::from_table({{0.0, 1.0}, {1.0, 0.0}});
  CHECK_FALSE(span::in_delta(two, {0.0, 0.0}));
  CHECK(span::in_delta(c4, {2.0, 2.0, 2.0, 2.0}));
}

TEST_CASE("minimality") {
  const auto c4 = span::circular_space(2);
  CHECK(span::is_minimal(c4, span::kuratowski(c4, std::size_t{1})));
  CHECK_FALSE(span::is_minimal(c4, {2.0, 2.0, 2.0, 2.0}));
  CHECK(span::is_minimal(c4, {1.0, 1.0, 1.0, 1.0}));
  CHECK_THROWS_AS(span::is_minimal(c4, {0.0, 0.0, 0.0, 0.0}),
                  PreconditionError);
}

TEST_CASE("projection examples") {
  const auto c4 = span::circular_space(2);

  const auto kappa = span::kuratowski(c4, std::size_t{0});
  CHECK(span::sup_dist(span::project_to_span(c4, kappa), kappa) <= 1e-9);

  RadiusFunction shifted(kappa);
  for (auto& v : shifted) v += 0.5;
  const auto projected = span::project_to_span(c4, shifted);
  for (std::size_t i = 0; i < 4; ++i) CHECK(projected[i] <= shifted[i] + 1e-12);
  CHECK(span::is_minimal(c4, projected));
  CHECK(span::sup_dist(projected, kappa) <= 1e-6);

  const auto center = span::project_to_span(c4, {2.0, 2.0, 2.0, 2.0});
  for (double v : center) CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("kuratowski rows") {
  const auto c4 = span::circular_space(2);
  CHECK(span::kuratowski(c4, std::string("4")) ==
        RadiusFunction{1.0, 2.0, 1.0, 0.0});
  const auto two = FiniteMetricSpace::create({"a", "b"}, {{0, 1}, {1, 0}});
  CHECK(span::kuratowski(two, std::string("a")) == RadiusFunction{0.0, 1.0});
  const auto one = FiniteMetricSpace::from_table({{0.0}});
  CHECK(span::kuratowski(one, std::size_t{0}) == RadiusFunction{0.0});
  CHECK_THROWS_AS(span::kuratowski(two, std::string("c")), PreconditionError);
}

TEST_CASE("kuratowski embedding preserves distances") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto x = testing::random_blob_space(rng, 3 + rng.uniform_index(5));
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j)
        CHECK(span::sup_dist(span::kuratowski(x, i), span::kuratowski(x, j)) ==
              x.d(i, j));
  }
}

TEST_CASE("circular vertices") {
  CHECK(span::circular_vertex(2, {1, 1}) == RadiusFunction{1.0, 2.0, 1.0, 0.0});
  CHECK(span::circular_vertex(2, {-1, -1}) ==
        RadiusFunction{1.0, 0.0, 1.0, 2.0});
  // Vertices adjacent in the hypercube sit at sup distance 1.
  CHECK(span::sup_dist(span::circular_vertex(2, {1, 1}),
                       span::circular_vertex(2, {-1, 1})) == 1.0);

  for (int k = 1; k <= 5; ++k) {
    const auto x = span::circular_space(k);
    const auto family = span::circular_vertex_family(k);
    CHECK(family.size() == (std::size_t{1} << k));
    for (std::size_t a = 0; a < family.size(); ++a) {
      CHECK(span::is_minimal(x, family[a], 1e-9));
      for (std::size_t b = a + 1; b < family.size(); ++b) {
        const double dist = span::sup_dist(family[a], family[b]);
        CHECK(dist > 0.0);
        CHECK(dist <= static_cast<double>(k));  // diam E(C_2k) = diam C_2k
        // Sign patterns differing in one coordinate sit at distance 1.
        if (std::popcount(static_cast<unsigned>(a ^ b)) == 1)
          CHECK(dist == 1.0);
      }
    }
  }
  CHECK_THROWS_AS(span::circular_vertex_family(17), PreconditionError);
}

TEST_CASE("mountain range extension on finite spaces") {
  const auto c4 = span::circular_space(2);

  // P = X with a minimal function reproduces it.
  const auto f = span::kuratowski(c4, std::size_t{2});
  const auto same = span::extend_via_mr(c4, {0, 1, 2, 3}, f);
  CHECK(span::sup_dist(same, f) <= 1e-12);

  const auto two = FiniteMetricSpace::create({"a", "b"}, {{0, 1}, {1, 0}});
  CHECK(span::extend_via_mr(two, {0}, {0.0}) == RadiusFunction{0.0, 1.0});

  const auto g = span::extend_via_mr(c4, {0, 2}, {1.0, 1.0});
  CHECK(g == RadiusFunction{1.0, 2.0, 1.0, 2.0});
  CHECK(span::in_delta(c4, g));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(std::abs(g[i] - g[j]) <= c4.d(i, j) + 1e-12);

  CHECK_THROWS_AS(span::extend_via_mr(c4, {0, 2}, {0.1, 0.1}),
                  PreconditionError);
}

TEST_CASE("extension stays 1-Lipschitz and in Delta on random instances") {
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    const auto x = testing::random_blob_space(rng, 4 + rng.uniform_index(4));
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (rng.uniform() < 0.6) subset.push_back(i);
    if (subset.empty()) subset.push_back(0);
    RadiusFunction f(subset.size());
    for (std::size_t a = 0; a < subset.size(); ++a) {
      double ecc = 0.0;
      for (std::size_t b = 0; b < subset.size(); ++b)
        ecc = std::max(ecc, x.d(subset[a], subset[b]));
      f[a] = std::max(ecc, 0.5) * rng.uniform(0.6, 1.4);
    }
    const auto g = span::extend_via_mr(x, subset, f);
    CHECK(span::in_delta(x, g));
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j)
        CHECK(std::abs(g[i] - g[j]) <= x.d(i, j) + 1e-12);
  }
}

TEST_CASE("midpoint minimality probes convexity vs antipodality") {
  const auto c4 = span::circular_space(2);
  CHECK(span::midpoint_minimality_probe(c4, span::circular_vertex(2, {1, 1}),
                                        span::circular_vertex(2, {-1, 1})));
  const auto kappa = span::kuratowski(c4, std::size_t{0});
  CHECK(span::midpoint_minimality_probe(c4, kappa, kappa));

  const auto line = testing::line_space(3);
  CHECK_FALSE(span::midpoint_minimality_probe(
      line, span::kuratowski(line, std::size_t{0}),
      span::kuratowski(line, std::size_t{2})));
}

TEST_CASE("antipodal spaces have convex tight spans, non-antipodal do not") {
  Rng rng(29);
  // Antipodal: all convex combinations of minimal functions stay minimal.
  for (int k : {2, 3}) {
    const auto x = span::circular_space(k);
    REQUIRE(antipode_map(x).has_value());
    for (int t = 0; t < 20; ++t) {
      const auto f = span::project_to_span(x, random_delta(rng, x));
      const auto g = span::project_to_span(x, random_delta(rng, x));
      for (const double lam : {0.25, 0.5, 0.75}) {
        RadiusFunction mix(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
          mix[i] = lam * f[i] + (1.0 - lam) * g[i];
        CHECK(span::is_minimal(x, mix, 1e-9));
      }
    }
  }
  // Non-antipodal: some Kuratowski midpoint fails.
  for (std::size_t n : {3, 4, 5, 6}) {
    const auto line = testing::line_space(n);
    REQUIRE_FALSE(antipode_map(line).has_value());
    bool found_failure = false;
    for (std::size_t a = 0; a < n && !found_failure; ++a)
      for (std::size_t b = a + 1; b < n && !found_failure; ++b)
        if (!span::midpoint_minimality_probe(line, span::kuratowski(line, a),
                                             span::kuratowski(line, b)))
          found_failure = true;
    CHECK(found_failure);
  }
}

TEST_CASE("projection post-conditions on random spaces") {
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const auto x = t % 2 == 0
                       ? testing::random_blob_space(rng, 3 + rng.uniform_index(5))
                       : testing::random_tree_space(rng, 3 + rng.uniform_index(5));
    const auto f = random_delta(rng, x);
    const auto g = span::project_to_span(x, f);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(g[i] <= f[i] + 1e-9);
    CHECK(span::in_delta(x, g, 1e-9));
    CHECK(span::is_minimal(x, g, 1e-6));
    CHECK(span::sup_dist(span::project_to_span(x, g), g) <= 1e-6);
  }
}
