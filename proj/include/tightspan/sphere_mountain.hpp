#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tightspan/metric_core.hpp"

namespace tightspan::mountain {

/// Finite configuration P on S^n with optional values V (the mountain-range
/// offsets). Points are validated to unit norm on construction.
struct SphereConfig {
  std::vector<SpherePoint> points;
  std::vector<double> values;  // empty for vertex-only configurations

  static SphereConfig create(std::vector<SpherePoint> points,
                             std::vector<double> values = {});
  std::size_t size() const { return points.size(); }
  std::size_t ambient_dim() const { return points.front().dim(); }
  bool antipodal_free(double tol = kTolMetric) const;
};

/// Antipodally closed sample of S^n with a precomputed antipode index.
struct SphereSampleGrid {
  std::vector<SpherePoint> sample;
  std::vector<std::size_t> antipode;
  double max_nn_spacing = 0.0;  // geodesic, max over points of NN distance
  std::string descriptor;
};

/// Uniform angles on S^1; count must be even.
SphereSampleGrid circle_grid(std::size_t count);
/// Fibonacci lattice on S^2 symmetrized by adding antipodes (2*half points).
SphereSampleGrid fibonacci_grid(std::size_t half_count);
/// Seeded random points on S^n, antipodally symmetrized.
SphereSampleGrid random_grid(std::size_t sphere_dim, std::size_t half_count,
                             std::uint64_t seed);

/// MR(P,V)(x) = min_i (d(x, p_i) + v_i).
double mr_eval(const SphereConfig& p, const SpherePoint& x);

double config_diameter(const SphereConfig& p);

/// Delta inequality + 1-Lipschitz bound for MR on all grid pairs.
/// Precondition: values lie in Delta(P).
bool mr_delta1_check(const SphereConfig& p, const SphereSampleGrid& grid,
                     double tol = kTolMetric);

/// Indices comaximal with point i: d(p_i, p_j) >= diam(P) - tol.
std::vector<std::size_t> comax(const SphereConfig& p, std::size_t i,
                               double tol = kTolMetric);

/// Tangent-direction criterion: every sampled tangent direction at p_i sees a
/// comaximal point with nonnegative inner product against the log direction.
bool is_held(const SphereConfig& p, std::size_t i, int dir_samples = 64);

/// Cross-validation criterion: d(., P) attains a local max at the antipode of
/// p_i, probed on a sphere of the given radius around it. The tolerance
/// 2*radius^2 absorbs second-order growth at inner-product-degenerate points.
bool is_held_local_max(const SphereConfig& p, std::size_t i,
                       int nbhd_samples = 64, double radius = 0.05);

bool is_pointwise_extremal(const SphereConfig& p, int dir_samples = 64);

struct AdmissibleReport {
  bool pass = false;
  double max_residual = 0.0;  // worst |MR(u) + MR(-u) - pi| over the grid
  double tol = 0.0;           // 3x grid max NN spacing
  bool lipschitz_ok = true;
  double half_diam = 0.0;
};

/// Antipodal-sum test for MR(P, diam/2) over an antipodally closed grid,
/// plus 1-Lipschitz spot checks on seeded grid pairs. Values in P are ignored.
AdmissibleReport admissible_check(const SphereConfig& p,
                                  const SphereSampleGrid& grid,
                                  std::uint64_t seed = 0);

/// Vertex set of the regular n-gon inscribed in S^1.
SphereConfig regular_gon(int vertices);

/// The revolved odd-gon family: polar angles Q_m = {2k pi/(2m+1), k=0..m},
/// each latitude swept at the given resolution. n=1 is the (2m+1)-gon itself.
SphereConfig build_P_mn(int m, int n, int resolution);

struct RevolvedReport {
  bool admissible = false;
  bool slice_identity_ok = false;
  double worst_slice_residual = 0.0;
  AdmissibleReport sum_report;
  bool pass() const { return admissible && slice_identity_ok; }
};

/// Checks the revolved-admissibility proposition on a rotationally symmetric
/// configuration: symmetry about the axis is a precondition (throws on
/// violation); the antipodal-sum test and the slice-reduction identity
/// d_{S^{n+1}}(x, P) = d_{S^n}(x, P cut by the slice through axis and x)
/// are evaluated and reported.
RevolvedReport revolved_admissibility_check(const SphereConfig& p,
                                            const SpherePoint& axis,
                                            const SphereSampleGrid& grid,
                                            std::uint64_t seed = 0);

}  // namespace tightspan::mountain
