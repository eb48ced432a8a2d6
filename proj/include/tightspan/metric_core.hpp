#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tightspan {

/// Absolute tolerance for checks on exact-arithmetic-derivable distance tables.
inline constexpr double kTolMetric = 1e-9;
/// Tolerance on |coords|_2 = 1 for sphere points.
inline constexpr double kTolUnit = 1e-9;

/// Labeled points with a full distance table; the substrate for the
/// Delta(X)/E(X) calculus.
struct FiniteMetricSpace {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> dist;

  /// Validates symmetry, zero diagonal, positivity off the diagonal and the
  /// triangle inequality (within tol). Throws SchemaError on violation.
  static FiniteMetricSpace create(std::vector<std::string> labels,
                                  std::vector<std::vector<double>> dist,
                                  double tol = kTolMetric);

  /// Same, with labels autogenerated as "1".."n".
  static FiniteMetricSpace from_table(std::vector<std::vector<double>> dist,
                                      double tol = kTolMetric);

  std::size_t size() const { return labels.size(); }
  double d(std::size_t i, std::size_t j) const { return dist[i][j]; }

  /// Index of a label; throws PreconditionError if unknown.
  std::size_t index_of(const std::string& label) const;
};

/// Angle on R/2pi, stored with representative in [0, 2pi).
struct CirclePoint {
  double angle;
  explicit CirclePoint(double raw);
};

/// Point on S^n embedded in R^{n+1}; unit norm is checked by the factory and
/// by the distance function, not by the aggregate itself.
struct SpherePoint {
  std::vector<double> coords;

  static SpherePoint checked(std::vector<double> coords, double tol = kTolUnit);
  static SpherePoint normalized(std::vector<double> coords);
  std::size_t dim() const { return coords.size(); }
};

/// Coordinate vector carrying l-infinity semantics.
struct LinfPoint {
  std::vector<double> coords;
  std::size_t dim() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }
};

double circle_dist(CirclePoint a, CirclePoint b);
double sphere_dist(const SpherePoint& u, const SpherePoint& v);
double linf_dist(const LinfPoint& x, const LinfPoint& y);

/// Smallest delta making the four-point condition hold over all quadruples.
double four_point_delta(const FiniteMetricSpace& x);

/// For each point, the smallest-index antipode satisfying
/// d(x,xb) = d(x,y) + d(y,xb) for all y; absent if any point has none.
std::optional<std::vector<std::size_t>> antipode_map(
    const FiniteMetricSpace& x, double tol = kTolMetric);

double diameter(const FiniteMetricSpace& x);
double radius(const FiniteMetricSpace& x);

/// Max over a probe grid of circle-distance to the sample; approximates the
/// Hausdorff distance between the sample and S^1. Throws on empty sample.
double hausdorff_circle(const std::vector<CirclePoint>& sample,
                        std::size_t probe_count = 4096);

}  // namespace tightspan
