#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "tightspan/metric_core.hpp"

namespace tightspan::circle {

/// Grid-scale tolerance: one-Lipschitz discretization error is one grid step.
inline double tol_grid(std::size_t n_cells) {
  return 2.0 * std::numbers::pi / static_cast<double>(n_cells);
}

// Both function types store values centered at pi/2 (w = f - pi/2). The
// F(S^1) -> E(S^1) extension then reflects by pure IEEE negation, which keeps
// the extension an exact isometry for sup-distances, bit for bit.

/// Function sampled at theta_j = j*pi/N on [0, pi]; N+1 values.
class GridFunction {
 public:
  GridFunction(std::size_t n_cells, const std::vector<double>& values);
  static GridFunction from_centered(std::size_t n_cells, std::vector<double> w);

  std::size_t n_cells() const { return n_; }
  std::size_t node_count() const { return n_ + 1; }
  double step() const { return std::numbers::pi / static_cast<double>(n_); }
  double theta(std::size_t j) const { return static_cast<double>(j) * step(); }
  double value(std::size_t j) const { return w_[j] + std::numbers::pi / 2.0; }
  double centered(std::size_t j) const { return w_[j]; }
  const std::vector<double>& centered_values() const { return w_; }
  std::vector<double> values() const;

 private:
  std::size_t n_;
  std::vector<double> w_;
};

/// Function sampled at theta_j = j*pi/N on the full circle; 2N values.
class CircleGridFunction {
 public:
  CircleGridFunction(std::size_t n_cells, const std::vector<double>& values);
  static CircleGridFunction from_centered(std::size_t n_cells,
                                          std::vector<double> w);

  /// n_cells is the full-circle cell count 2N.
  std::size_t n_cells() const { return w_.size(); }
  std::size_t half() const { return w_.size() / 2; }
  double step() const {
    return 2.0 * std::numbers::pi / static_cast<double>(w_.size());
  }
  double theta(std::size_t j) const { return static_cast<double>(j) * step(); }
  double value(std::size_t j) const { return w_[j] + std::numbers::pi / 2.0; }
  double centered(std::size_t j) const { return w_[j]; }
  const std::vector<double>& centered_values() const { return w_; }
  std::vector<double> values() const;

  double min_value() const;

 private:
  explicit CircleGridFunction(std::vector<double> w) : w_(std::move(w)) {}
  std::vector<double> w_;
};

/// Finite union of disjoint closed subintervals of [0, pi].
class IntervalSubset {
 public:
  explicit IntervalSubset(std::vector<std::pair<double, double>> intervals);

  const std::vector<std::pair<double, double>>& intervals() const {
    return intervals_;
  }
  double measure() const;
  /// mu(A intersect [0, phi]), exact piecewise-linear evaluation.
  double measure_below(double phi) const;

 private:
  std::vector<std::pair<double, double>> intervals_;
};

/// Discrete 1-Lipschitz + endpoint-sum f(0)+f(pi)=pi, within tol_grid.
bool in_F(const GridFunction& f);

/// 1-Lipschitz around the circle + antipodal sums f(t)+f(t+pi)=pi.
bool in_E(const CircleGridFunction& f);

/// f~ = f on [0,pi], pi - f(.-pi) on (pi,2pi). Requires in_F.
CircleGridFunction extend_to_circle(const GridFunction& f);

double sup_dist(const GridFunction& f, const GridFunction& g);
double sup_dist(const CircleGridFunction& f, const CircleGridFunction& g);

/// The extreme point h_A(phi) = h_A(0) + 2 mu(A cap [0,phi]) - phi with
/// h_A(0) = pi - mu(A), evaluated in closed form at the grid nodes.
GridFunction h_A(const IntervalSubset& a, std::size_t n_cells);

/// Every discrete slope within tol_slope of +-1. Requires in_F.
bool is_extreme(const GridFunction& f, double tol_slope = 1e-6);

/// Constant center f0 = pi/2.
GridFunction center_function(std::size_t n_cells);

/// d(theta, .) restricted to [0, pi].
GridFunction kuratowski_grid(std::size_t n_cells, double theta);
/// d(theta, .) on the full circle grid (n_cells = N of the half grid).
CircleGridFunction kuratowski_circle(std::size_t n_cells, double theta);

struct DecomposeResult {
  std::vector<IntervalSubset> parts;  // sampled slope-sign patterns, as sets
  GridFunction reconstruction;
  double error;  // sup distance between reconstruction and target
};

/// Monte-Carlo Krein-Milman probe: sample m extreme functions whose slope
/// signs are independently +1 with probability (1+s_j)/2, re-anchor each to
/// the endpoint-sum constraint, and average. Requires in_F.
DecomposeResult decompose_extreme(const GridFunction& f, int m,
                                  std::uint64_t seed);

struct CenterReport {
  double max_center_distance = 0.0;  // max over inputs of sup_dist(f, f0)
  bool radius_bound_ok = true;       // all distances <= pi/2 + tol_grid
  bool witness_ok = true;            // Kuratowski witness at pi/2 + margin
  double worst_witness_slack = 0.0;
};

/// Checks rad(E) = diam/2 facts on a batch of members of F(S^1).
CenterReport center_check(const std::vector<GridFunction>& fs);

/// Grid proxy for "f has a value < r": min value < r - tol_grid. Requires in_E.
bool in_thickening(const CircleGridFunction& f, double r);

enum class ComplementOutcome { Equivalent, Indeterminate, Violated };

/// Tests min f < r  <=>  sup_dist(f, f0) > pi/2 - r, skipping inputs within
/// tol_band of either boundary.
ComplementOutcome complement_lemma_check(const CircleGridFunction& f, double r);

struct Arc {
  double start;   // angle of the first node of the minimal covering arc
  double length;  // arc length, multiple of the grid step
  std::size_t start_index;
};

/// Minimal circular arc containing the strict sublevel set {f < r};
/// nullopt when the sublevel set is empty. Requires in_E and r in (0, pi/3].
std::optional<Arc> sublevel_arc(const CircleGridFunction& f, double r);

/// Weighted center of mass of the sublevel set (trapezoid rule over the grid).
/// Requires in_E, r in (0, pi/3], and in_thickening(f, r).
CirclePoint barycenter(const CircleGridFunction& f, double r);

/// Same, with the integration window start overridden (used to verify the
/// result does not depend on the representative of theta_f).
CirclePoint barycenter_from(const CircleGridFunction& f, double r,
                            double theta_start);

/// H(f,t) = t f + (1-t) d(m_f^r, .). Requires f in E(S^1) and in B_r.
CircleGridFunction homotopy_step(const CircleGridFunction& f, double t,
                                 double r);

/// (1-t) f + t g; the linear bicombing on the convex set E(S^1).
CircleGridFunction linear_bicombing(const CircleGridFunction& f,
                                    const CircleGridFunction& g, double t);

}  // namespace tightspan::circle
