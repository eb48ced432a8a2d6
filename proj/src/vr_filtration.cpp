#include "tightspan/vr_filtration.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

#include "tightspan/errors.hpp"

namespace tightspan::vr {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), count_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[a] = b;
    --count_;
  }

  std::size_t count() const { return count_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t count_;
};

}  // namespace

std::size_t component_count(const FiniteMetricSpace& x, double scale,
                            bool open) {
  if (scale <= 0.0) throw PreconditionError("scale must be positive");
  UnionFind uf(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double d = x.d(i, j);
      if (open ? d < scale : d <= scale) uf.unite(i, j);
    }
  return uf.count();
}

std::size_t component_count(const ScaleGraph& g) {
  return component_count(g.base, g.scale, g.open);
}

bool is_tree_like(const FiniteMetricSpace& x, double tol) {
  return four_point_delta(x) <= tol;
}

std::vector<double> critical_scales(const FiniteMetricSpace& x) {
  std::vector<double> scales;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) scales.push_back(x.d(i, j));
  std::sort(scales.begin(), scales.end());
  scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
  return scales;
}

std::string s1_homotopy_label(double r) {
  constexpr double pi = std::numbers::pi;
  if (r <= 0.0) throw PreconditionError("scale must be positive");
  if (r >= pi / 2.0) return "point";
  for (long n = 0;; ++n) {
    const double upper = static_cast<double>(n + 1) * pi /
                         static_cast<double>(2 * n + 3);
    if (r <= upper) return "S^" + std::to_string(2 * n + 1);
  }
}

}  // namespace tightspan::vr
