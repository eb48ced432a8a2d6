#pragma once

#include <string>
#include <vector>

#include "tightspan/metric_core.hpp"

namespace tightspan::vr {

/// 1-skeleton of the Vietoris-Rips complex at a scale. Open strictness
/// (d < scale) matches open thickenings B_r; the closed variant exists
/// because the Adamaszek-Adams homotopy intervals are right-closed.
struct ScaleGraph {
  FiniteMetricSpace base;
  double scale;
  bool open = true;
};

/// Union-find component count of the threshold graph.
std::size_t component_count(const ScaleGraph& g);
std::size_t component_count(const FiniteMetricSpace& x, double scale,
                            bool open = true);

/// four_point_delta(X) <= tol.
bool is_tree_like(const FiniteMetricSpace& x, double tol = kTolMetric);

/// Sorted distinct positive distances: the scales where components can merge.
std::vector<double> critical_scales(const FiniteMetricSpace& x);

/// Homotopy type of B_r(S^1, E(S^1)): "S^{2n+1}" on the interval
/// (n pi/(2n+1), (n+1) pi/(2n+3)], "point" for r >= pi/2.
std::string s1_homotopy_label(double r);

}  // namespace tightspan::vr
