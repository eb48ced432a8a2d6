#include <cmath>
#include <numbers>

#include <doctest.h>

#include "tightspan/tight_span.hpp"
#include "tightspan/vr_filtration.hpp"
#include "test_helpers.hpp"

using namespace tightspan;

namespace {
constexpr double pi = std::numbers::pi;

// Independent oracle: naive agglomerative single linkage.
std::vector<double> single_linkage_heights(const FiniteMetricSpace& x) {
  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < x.size(); ++i) clusters.push_back({i});
  std::vector<double> heights;
  while (clusters.size() > 1) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t ba = 0, bb = 1;
    for (std::size_t a = 0; a < clusters.size(); ++a)
      for (std::size_t b = a + 1; b < clusters.size(); ++b) {
        double link = std::numeric_limits<double>::infinity();
        for (std::size_t u : clusters[a])
          for (std::size_t v : clusters[b]) link = std::min(link, x.d(u, v));
        if (link < best) {
          best = link;
          ba = a;
          bb = b;
        }
      }
    heights.push_back(best);
    clusters[ba].insert(clusters[ba].end(), clusters[bb].begin(),
                        clusters[bb].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bb));
  }
  std::sort(heights.begin(), heights.end());
  return heights;
}
}  // namespace

TEST_CASE("component counts at extreme scales") {
  Rng rng(2);
  const auto x = testing::random_blob_space(rng, 8);
  CHECK(vr::component_count(x, diameter(x) + 0.5) == 1);
  double min_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      min_dist = std::min(min_dist, x.d(i, j));
  CHECK(vr::component_count(x, min_dist * 0.5, false) == x.size());
}

TEST_CASE("component counts match single linkage on trees") {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto tree = testing::random_tree_space(rng, 5 + rng.uniform_index(20));
    const auto heights = single_linkage_heights(tree);
    for (const double h : vr::critical_scales(tree)) {
      const auto closed_merges = static_cast<std::size_t>(std::count_if(
          heights.begin(), heights.end(), [&](double v) { return v <= h; }));
      const auto open_merges = static_cast<std::size_t>(std::count_if(
          heights.begin(), heights.end(), [&](double v) { return v < h; }));
      CHECK(vr::component_count(tree, h, false) ==
            tree.size() - closed_merges);
      CHECK(vr::component_count(tree, h, true) == tree.size() - open_merges);
    }
  }
}

TEST_CASE("component count is monotone in scale") {
  Rng rng(5);
  const auto x = testing::random_blob_space(rng, 10);
  std::size_t prev = x.size() + 1;
  for (const double s : vr::critical_scales(x)) {
    const std::size_t count = vr::component_count(x, s, false);
    CHECK(count <= prev);
    prev = count;
  }
  CHECK(prev == 1);
}

TEST_CASE("tree-likeness") {
  Rng rng(7);
  CHECK(vr::is_tree_like(testing::random_tree_space(rng, 12)));
  CHECK_FALSE(vr::is_tree_like(span::circular_space(2)));
  CHECK(vr::is_tree_like(testing::random_blob_space(rng, 3)));
  CHECK(vr::is_tree_like(FiniteMetricSpace::from_table({{0.0}})));
}

TEST_CASE("homotopy labels for circle thickenings") {
  CHECK(vr::s1_homotopy_label(pi / 4.0) == "S^1");
  CHECK(vr::s1_homotopy_label(0.4 * pi) == "S^3");
  CHECK(vr::s1_homotopy_label(pi / 2.0) == "point");
  CHECK(vr::s1_homotopy_label(2.0) == "point");

  // Interval endpoints: left-open, right-closed at n pi / (2n+1).
  for (long n = 1; n <= 5; ++n) {
    const double boundary = static_cast<double>(n) * pi / (2 * n + 1);
    CHECK(vr::s1_homotopy_label(boundary) == "S^" + std::to_string(2 * n - 1));
    CHECK(vr::s1_homotopy_label(std::nextafter(boundary, 4.0)) ==
          "S^" + std::to_string(2 * n + 1));
  }
}
