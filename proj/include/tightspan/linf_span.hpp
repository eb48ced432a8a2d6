#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tightspan/metric_core.hpp"

namespace tightspan::linf {

/// Tolerance for decisions backed by exact shape tags (Dykstra residuals).
inline constexpr double kTolConeExact = 1e-6;

/// The cone base + xi*Lambda_i = {z : xi (z_i - base_i) = d_inf(z, base)}.
struct Cone {
  LinfPoint base;
  std::size_t axis;
  int sign;  // +1 or -1
};

/// Exact membership predicate (within tol).
bool in_cone(const Cone& c, const LinfPoint& z, double tol = kTolMetric);

/// Membership in the open interior by the given margin: coordinate `axis`
/// strictly dominates every other coordinate gap.
bool in_cone_interior(const Cone& c, const LinfPoint& z, double margin);

/// d(x,z) + d(z,y) = d(x,y), within tol.
bool in_interval(const LinfPoint& x, const LinfPoint& y, const LinfPoint& z,
                 double tol = kTolMetric);

/// Checks I_xy = (x + xi Lambda_i) cap (y - xi Lambda_i) on the probes, with
/// (i, xi) the maximizing coordinate of y - x.
bool interval_decomposition_check(const LinfPoint& x, const LinfPoint& y,
                                  const std::vector<LinfPoint>& probes,
                                  double tol = kTolMetric);

struct SphereShape {
  LinfPoint center;
  double radius;
};
struct BallShape {
  LinfPoint center;
  double radius;
};
struct BoxShape {
  LinfPoint lo;
  LinfPoint hi;
};

/// Finite sample of a subset of R^n_inf, optionally carrying an exact shape
/// tag that unlocks exact cone-intersection decisions. `spacing` is the max
/// nearest-neighbour l-inf distance within the sample (density certificate).
struct SampledLinfSet {
  std::vector<LinfPoint> points;
  std::optional<SphereShape> sphere;
  std::optional<BallShape> ball;
  std::optional<BoxShape> box;
  double spacing = 0.0;

  static SampledLinfSet from_points(std::vector<LinfPoint> points);
  std::size_t dim() const { return points.front().dim(); }
  /// Default slack for sampled membership decisions: 2x sample spacing.
  double sampled_tol() const { return 2.0 * spacing; }
};

/// Euclidean unit-sphere sample in R^dim (the S^{dim-1}_inf model), tagged.
SampledLinfSet sample_sphere(std::size_t dim, std::size_t count,
                             std::uint64_t seed);
SampledLinfSet sample_ball(std::size_t dim, std::size_t count,
                           std::uint64_t seed);
SampledLinfSet sample_box(std::size_t dim, std::size_t count,
                          std::uint64_t seed);
/// The running planar example ([-1,1] x {0}) plus the apex (0, 3).
SampledLinfSet segment_plus_apex(std::size_t segment_count);

struct DykstraOptions {
  double tol = 1e-9;
  int max_cycles = 100000;
};

/// Euclidean projection of `target` onto the cone (Dykstra over the cone's
/// bounding half-spaces). Returns the projection point.
LinfPoint project_onto_cone(const Cone& c, const LinfPoint& target,
                            const DykstraOptions& opt = {});

/// min over the cone of ||z - target||_2.
double cone_min_distance(const Cone& c, const LinfPoint& target,
                         const DykstraOptions& opt = {});

/// Does the cone meet X? Exact decision via Dykstra when X carries a shape
/// tag, sampled membership with `slack` otherwise (slack < 0 picks the
/// default: kTolConeExact for tagged sets, 2x spacing for samples).
bool cone_set_intersects(const Cone& c, const SampledLinfSet& x,
                         double slack = -1.0);

/// All 2n cones at p meet X.
bool is_surrounding(const LinfPoint& p, const SampledLinfSet& x,
                    double slack = -1.0);

/// d_inf(p, .)|X is minimal over the sample: every sample x pairs with some
/// sample y so that p lies on a geodesic between them (within slack).
bool is_minimal_point(const LinfPoint& p, const SampledLinfSet& x,
                      double slack = -1.0);

/// sup_x |d(p,x) - d(q,x)| attains d(p,q), within tol (both surrounding).
bool surrounding_distance_preservation(const LinfPoint& p, const LinfPoint& q,
                                       const SampledLinfSet& x,
                                       double tol = -1.0);

struct WitnessResult {
  int n = 0;
  double lambda = 0.0;
  LinfPoint p;           // (1+lambda)/sqrt(n+1) * (1,...,1) in R^{n+1}
  bool valid = false;
  double discriminant = 0.0;
  double root = 0.0;     // positive root t of the sphere-crossing quadratic
  std::string reason;    // failing condition when invalid
};

/// The D^{n+1}_inf non-injectivity witness: checks the discriminant
/// (n-1)^2 (1+lambda)^2 - (n+1)^2 (lambda^2 + 2 lambda) >= 0, the exact cone
/// memberships of the flipped-diagonal points v^i, and that the positive
/// root lands back on the unit sphere.
WitnessResult witness_point(int n, double lambda);

/// Largest lambda with a valid witness: lambda^2 + 2 lambda = (n-1)^2/(4n).
double witness_lambda_max(int n);

/// For every cone whose open interior (by `margin`) contains a sample, the
/// mirror cone meets X. Precondition: p is X-minimal.
bool mirror_lemma_check(const LinfPoint& p, const SampledLinfSet& x,
                        double margin = -1.0);

struct CoincidenceReport {
  std::size_t accepted = 0;
  std::size_t surrounding_pass = 0;
  std::size_t mirror_pass = 0;
  double worst_cone_residual = 0.0;  // max over cones of dykstra_min - radius
  double sample_spacing = 0.0;
  std::size_t trials = 0;
  bool pass() const {
    return accepted > 0 && surrounding_pass == accepted &&
           mirror_pass == accepted;
  }
};

/// Rejection-samples X-minimal points for S^2_inf from the bounding box and
/// checks each against the exact surrounding test and the mirror lemma.
CoincidenceReport s2_coincidence_sweep(std::size_t target_accepted,
                                       std::uint64_t seed,
                                       std::size_t sphere_sample = 4000);

/// Midpoints of random surrounding pairs stay surrounding (X convex-tagged).
bool convexity_sweep(const SampledLinfSet& x, std::size_t trials,
                     std::uint64_t seed);

/// Candidates minimal for X stay minimal for X augmented with the candidates
/// (sampled surrogate of E(E(X)) = E(X)). Non-minimal candidates are
/// filtered out, not errors.
bool idempotence_probe(const SampledLinfSet& x,
                       const std::vector<LinfPoint>& candidates);

}  // namespace tightspan::linf
