#include "tightspan/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tightspan/circle_span.hpp"
#include "tightspan/errors.hpp"
#include "tightspan/linf_span.hpp"
#include "tightspan/metric_core.hpp"
#include "tightspan/rng.hpp"
#include "tightspan/sphere_mountain.hpp"
#include "tightspan/tight_span.hpp"
#include "tightspan/vr_filtration.hpp"

namespace tightspan::acceptance {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// Shared generators

FiniteMetricSpace random_tree_space(Rng& rng, std::size_t nodes) {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(nodes);
  for (std::size_t i = 1; i < nodes; ++i) {
    const std::size_t parent = rng.uniform_index(i);
    const double w = 1.0 + static_cast<double>(rng.uniform_index(9));
    adj[i].emplace_back(parent, w);
    adj[parent].emplace_back(i, w);
  }
  std::vector<std::vector<double>> dist(nodes, std::vector<double>(nodes, 0.0));
  for (std::size_t s = 0; s < nodes; ++s) {
    std::vector<bool> seen(nodes, false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const auto& [v, w] : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          dist[s][v] = dist[s][u] + w;
          stack.push_back(v);
        }
    }
  }
  return FiniteMetricSpace::from_table(std::move(dist));
}

FiniteMetricSpace random_metric_space(Rng& rng, std::size_t n, int kind) {
  if (kind == 0) {
    // Distances in [1,2] satisfy the triangle inequality automatically.
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        d[i][j] = d[j][i] = rng.uniform(1.0, 2.0);
    return FiniteMetricSpace::from_table(std::move(d));
  }
  if (kind == 1) return random_tree_space(rng, n);
  // Euclidean point cloud in R^3.
  std::vector<std::vector<double>> pts(n, std::vector<double>(3));
  for (auto& p : pts)
    for (auto& c : p) c = rng.uniform(-1.0, 1.0);
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (int c = 0; c < 3; ++c) {
        const double gap = pts[i][c] - pts[j][c];
        s += gap * gap;
      }
      d[i][j] = d[j][i] = std::sqrt(s) + 0.05;  // keep points separated
    }
  return FiniteMetricSpace::from_table(std::move(d));
}

span::RadiusFunction random_delta_function(Rng& rng,
                                           const FiniteMetricSpace& x) {
  // f(p) = ecc(p) * u with u in [0.6, 1.4] always lands in Delta(X); the
  // rejection check stays as a guard.
  for (int attempt = 0; attempt < 100; ++attempt) {
    span::RadiusFunction f(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      double ecc = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) ecc = std::max(ecc, x.d(i, j));
      f[i] = ecc * rng.uniform(0.6, 1.4);
    }
    if (span::in_delta(x, f)) return f;
  }
  throw ConvergenceError("random Delta(X) generation failed");
}

/// Random member of F(S^1): re-anchored 1-Lipschitz random walk, occasionally
/// blended with a Kuratowski function to populate the thickenings.
circle::GridFunction random_F_member(Rng& rng, std::size_t n_cells,
                                     bool kuratowski_lean) {
  const double step = kPi / static_cast<double>(n_cells);
  std::vector<double> w(n_cells + 1, 0.0);
  for (std::size_t j = 0; j < n_cells; ++j)
    w[j + 1] = w[j] + rng.uniform(-1.0, 1.0) * step;
  const double shift = -0.5 * w[n_cells];
  for (auto& v : w) v += shift;
  auto f = circle::GridFunction::from_centered(n_cells, std::move(w));
  if (!kuratowski_lean) return f;
  const auto kappa =
      circle::kuratowski_grid(n_cells, rng.uniform(0.0, 2.0 * kPi));
  const double s = rng.uniform(0.1, 0.9);
  std::vector<double> mixed(n_cells + 1);
  for (std::size_t j = 0; j <= n_cells; ++j)
    mixed[j] = (1.0 - s) * kappa.centered(j) + s * f.centered(j);
  return circle::GridFunction::from_centered(n_cells, std::move(mixed));
}

circle::IntervalSubset random_intervals(Rng& rng, bool grid_aligned,
                                        std::size_t n_cells) {
  const std::size_t pieces = 1 + rng.uniform_index(4);
  std::vector<double> cuts(2 * pieces);
  for (auto& c : cuts) {
    c = rng.uniform(0.0, kPi);
    if (grid_aligned) {
      const double step = kPi / static_cast<double>(n_cells);
      c = std::round(c / step) * step;
    }
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::pair<double, double>> iv;
  for (std::size_t p = 0; p < pieces; ++p)
    if (cuts[2 * p + 1] > cuts[2 * p]) iv.emplace_back(cuts[2 * p], cuts[2 * p + 1]);
  if (iv.empty()) iv.emplace_back(0.0, kPi / 2.0);
  return circle::IntervalSubset(std::move(iv));
}

/// Naive agglomerative single-linkage: the independent component oracle.
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

// ---------------------------------------------------------------------------
// Criteria

CriterionResult c1_circular_vertices(std::uint64_t) {
  CriterionResult r{1, "E(C_2k) vertex family minimal and distinct", false, ""};
  for (int k = 1; k <= 8; ++k) {
    const auto x = span::circular_space(k);
    const auto family = span::circular_vertex_family(k);
    if (family.size() != (std::size_t{1} << k)) return r;
    for (std::size_t a = 0; a < family.size(); ++a) {
      if (!span::is_minimal(x, family[a], 1e-9)) return r;
      for (std::size_t b = a + 1; b < family.size(); ++b)
        if (span::sup_dist(family[a], family[b]) == 0.0) return r;
    }
  }
  r.pass = true;
  r.detail = "k=1..8, 2^k vertices each, minimality tol 1e-9";
  return r;
}

CriterionResult c2_projection(std::uint64_t seed) {
  CriterionResult r{2, "projection to E(X) on random finite spaces", false, ""};
  double worst_idem = 0.0;
  for (int inst = 0; inst < 200; ++inst) {
    Rng rng = Rng::stream(seed, 100 + static_cast<std::uint64_t>(inst));
    const std::size_t n = 3 + rng.uniform_index(5);
    const auto x = random_metric_space(rng, n, inst % 3);
    for (int rep = 0; rep < 5; ++rep) {
      const auto f = random_delta_function(rng, x);
      const auto g = span::project_to_span(x, f);
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] > f[i] + 1e-9) return r;
      if (!span::in_delta(x, g, 1e-9)) return r;
      if (!span::is_minimal(x, g, 1e-6)) return r;
      const auto g2 = span::project_to_span(x, g);
      const double idem = span::sup_dist(g, g2);
      worst_idem = std::max(worst_idem, idem);
      if (idem > 1e-6) return r;
    }
  }
  r.pass = true;
  r.detail = "200 spaces x 5 functions; worst idempotence residual " +
             fmt(worst_idem);
  return r;
}

CriterionResult c3_circle_discretization(std::uint64_t seed) {
  CriterionResult r{3, "h_A membership and extension isometry", false, ""};
  const std::size_t n = 360;
  for (int t = 0; t < 1000; ++t) {
    Rng rng = Rng::stream(seed, 300 + static_cast<std::uint64_t>(t));
    const auto a = random_intervals(rng, false, n);
    const auto h = circle::h_A(a, n);
    // Closed-form evaluation passes the membership conditions with no slack.
    const double step = h.step();
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(h.centered(j + 1) - h.centered(j)) > step + 1e-12) return r;
    if (std::abs(h.centered(0) + h.centered(n)) > 1e-12) return r;
    if (!circle::in_F(h)) return r;
    if (!circle::in_E(circle::extend_to_circle(h))) return r;
  }
  for (int t = 0; t < 500; ++t) {
    Rng rng = Rng::stream(seed, 1500 + static_cast<std::uint64_t>(t));
    const auto f = random_F_member(rng, n, t % 2 == 0);
    const auto g = t % 3 == 0 ? circle::h_A(random_intervals(rng, false, n), n)
                              : random_F_member(rng, n, false);
    const double direct = circle::sup_dist(f, g);
    const double extended =
        circle::sup_dist(circle::extend_to_circle(f), circle::extend_to_circle(g));
    if (direct != extended) return r;  // bit-exact by construction
  }
  r.pass = true;
  r.detail = "1000 h_A members, 500 bit-exact isometry pairs, tol_grid 2pi/360";
  return r;
}

CriterionResult c4_center_radius(std::uint64_t seed) {
  CriterionResult r{4, "center and radius of E(S^1)", false, ""};
  const std::size_t n = 360;
  const double tol = circle::tol_grid(n);
  std::vector<circle::GridFunction> members;
  for (int t = 0; t < 500; ++t) {
    Rng rng = Rng::stream(seed, 4000 + static_cast<std::uint64_t>(t));
    members.push_back(random_F_member(rng, n, t % 2 == 0));
  }
  const auto report = circle::center_check(members);
  if (!report.radius_bound_ok || !report.witness_ok) return r;
  for (int t = 0; t < 360; ++t) {
    const double theta = 2.0 * kPi * t / 360.0;
    const auto kappa = circle::kuratowski_grid(n, theta);
    double dist = 0.0;
    for (std::size_t j = 0; j <= n; ++j)
      dist = std::max(dist, std::abs(kappa.centered(j)));
    if (std::abs(dist - kPi / 2.0) > tol) return r;
  }
  r.pass = true;
  r.detail = "500 members within pi/2 + " + fmt(tol) +
             " of f0; 360 Kuratowski at exactly pi/2";
  return r;
}

CriterionResult c5_complement_lemma(std::uint64_t seed) {
  CriterionResult r{5, "thickening-complement biconditional", false, ""};
  const std::size_t n = 360;
  const double rs[] = {kPi / 6.0, kPi / 4.0, kPi / 3.0, 0.45 * kPi};
  std::size_t indeterminate = 0;
  for (int t = 0; t < 1000; ++t) {
    Rng rng = Rng::stream(seed, 5000 + static_cast<std::uint64_t>(t));
    const auto f =
        circle::extend_to_circle(random_F_member(rng, n, t % 2 == 0));
    for (const double rr : rs) {
      const auto outcome = circle::complement_lemma_check(f, rr);
      if (outcome == circle::ComplementOutcome::Violated) return r;
      if (outcome == circle::ComplementOutcome::Indeterminate) ++indeterminate;
    }
  }
  r.pass = true;
  r.detail = "4000 evaluations, 0 violations, " + std::to_string(indeterminate) +
             " inside the 2pi/360 guard band";
  return r;
}

CriterionResult c6_retraction(std::uint64_t seed) {
  CriterionResult r{6, "barycenter retraction and homotopy membership", false,
                    ""};
  const std::size_t n = 360;
  const double radius = kPi / 4.0;
  const double bound = 2.0 * (2.0 * kPi / 720.0);
  double worst = 0.0;
  for (int t = 0; t < 360; ++t) {
    const double theta = 2.0 * kPi * t / 360.0;
    const auto kappa = circle::kuratowski_circle(n, theta);
    const CirclePoint m = circle::barycenter(kappa, radius);
    worst = std::max(worst, circle_dist(m, CirclePoint(theta)));
    if (worst > bound) {
      r.detail = "retraction error " + fmt(worst) + " at theta " + fmt(theta);
      return r;
    }
  }
  const double band = circle::tol_grid(n);
  for (int t = 0; t < 200; ++t) {
    Rng rng = Rng::stream(seed, 6000 + static_cast<std::uint64_t>(t));
    // Blend a Kuratowski function toward a random member, keeping a margin
    // inside B_r.
    circle::CircleGridFunction f = circle::kuratowski_circle(n, 0.0);
    for (int attempt = 0; attempt < 50; ++attempt) {
      const auto g =
          circle::extend_to_circle(random_F_member(rng, n, false));
      const auto kappa =
          circle::kuratowski_circle(n, rng.uniform(0.0, 2.0 * kPi));
      const auto mix =
          circle::linear_bicombing(kappa, g, rng.uniform(0.0, 0.5));
      if (mix.min_value() < radius - 3.0 * band) {
        f = mix;
        break;
      }
    }
    const double tt = rng.uniform(0.0, 1.0);
    const auto h = circle::homotopy_step(f, tt, radius);
    if (!circle::in_E(h)) return r;
    if (!(h.min_value() < radius + band)) return r;
  }
  r.pass = true;
  r.detail = "360 base points, worst retraction error " + fmt(worst) +
             " <= " + fmt(bound) + "; 200 homotopy outputs in E and B_r";
  return r;
}

CriterionResult c7_extreme_decomposition(std::uint64_t seed) {
  CriterionResult r{7, "Krein-Milman reconstruction error", false, ""};
  const std::size_t n = 180;
  double worst2000 = 0.0;
  for (int target = 0; target < 20; ++target) {
    Rng rng = Rng::stream(seed, 7000 + static_cast<std::uint64_t>(target));
    const auto f = random_F_member(rng, n, target % 4 == 0);
    const auto sub_seed = [&](int mi) {
      return Rng::stream(seed, 7100 + static_cast<std::uint64_t>(target) * 3 +
                                   static_cast<std::uint64_t>(mi))
          .next_u64();
    };
    const double e500 = circle::decompose_extreme(f, 500, sub_seed(0)).error;
    const double e2000 = circle::decompose_extreme(f, 2000, sub_seed(1)).error;
    const double e8000 = circle::decompose_extreme(f, 8000, sub_seed(2)).error;
    worst2000 = std::max(worst2000, e2000);
    if (e2000 > 0.1) {
      r.detail = "m=2000 error " + fmt(e2000) + " for target " +
                 std::to_string(target);
      return r;
    }
    if (!(e8000 < e500)) {
      r.detail = "no monotone improvement on target " + std::to_string(target);
      return r;
    }
  }
  r.pass = true;
  r.detail = "20 targets, worst m=2000 error " + fmt(worst2000) +
             " <= 0.1; m=8000 < m=500 on every target";
  return r;
}

CriterionResult c8_mountain_ranges(std::uint64_t seed) {
  CriterionResult r{8, "admissible configurations on spheres", false, ""};
  const auto s1 = mountain::circle_grid(4096);
  double worst = 0.0;
  for (int m = 1; m <= 3; ++m) {
    const auto rep =
        mountain::admissible_check(mountain::regular_gon(2 * m + 1), s1, seed);
    worst = std::max(worst, rep.max_residual);
    if (!rep.pass) {
      r.detail = "(2m+1)-gon failed at m=" + std::to_string(m) +
                 " residual " + fmt(rep.max_residual);
      return r;
    }
  }
  const auto square =
      mountain::admissible_check(mountain::regular_gon(4), s1, seed);
  if (square.pass || square.max_residual < kPi / 2.0 - square.tol) {
    r.detail = "regular 4-gon residual " + fmt(square.max_residual) +
               " below pi/2 - tol";
    return r;
  }
  const auto s2 = mountain::fibonacci_grid(1200);
  const auto s3 = mountain::random_grid(3, 1200, seed);
  for (int m = 1; m <= 2; ++m) {
    const auto rep2 =
        mountain::admissible_check(mountain::build_P_mn(m, 2, 2000), s2, seed);
    const auto rep3 =
        mountain::admissible_check(mountain::build_P_mn(m, 3, 60), s3, seed);
    worst = std::max({worst, rep2.max_residual, rep3.max_residual});
    if (!rep2.pass || !rep3.pass) {
      r.detail = "P_" + std::to_string(m) + "^n failed: residuals " +
                 fmt(rep2.max_residual) + " (n=2, tol " + fmt(rep2.tol) +
                 "), " + fmt(rep3.max_residual) + " (n=3, tol " +
                 fmt(rep3.tol) + ")";
      return r;
    }
  }
  r.pass = true;
  r.detail = "odd-gons m<=3 and P_m^n (m<=2, n=2,3) pass; 4-gon residual " +
             fmt(square.max_residual) + "; worst admissible residual " +
             fmt(worst);
  return r;
}

CriterionResult c9_linf_witness(std::uint64_t seed) {
  CriterionResult r{9, "l-inf witness verdicts and memberships", false, ""};
  // Verdicts.
  if (!linf::witness_point(2, 0.05).valid) return r;
  for (int n = 3; n <= 5; ++n)
    if (!linf::witness_point(n, 0.9 * linf::witness_lambda_max(n)).valid)
      return r;
  for (const double lam : {0.01, 0.05, 0.2})
    if (linf::witness_point(1, lam).valid) return r;
  for (int n = 2; n <= 5; ++n)
    if (linf::witness_point(n, 1.1 * linf::witness_lambda_max(n)).valid)
      return r;
  // Memberships of the valid witnesses against 5000-point samples.
  std::string spacings;
  for (int n = 2; n <= 5; ++n) {
    const double lam = n == 2 ? 0.05 : 0.9 * linf::witness_lambda_max(n);
    const auto wit = linf::witness_point(n, lam);
    const auto sample = linf::sample_sphere(static_cast<std::size_t>(n) + 1,
                                            5000, seed + static_cast<std::uint64_t>(n));
    if (!linf::is_minimal_point(wit.p, sample)) {
      r.detail = "witness not minimal at n=" + std::to_string(n);
      return r;
    }
    if (!linf::is_surrounding(wit.p, sample)) {
      r.detail = "witness not surrounding at n=" + std::to_string(n);
      return r;
    }
    spacings += (spacings.empty() ? "" : ", ") + fmt(sample.spacing);
  }
  r.pass = true;
  r.detail = "verdicts match; witnesses minimal+surrounding; sample spacings " +
             spacings;
  return r;
}

CriterionResult c10_s2_coincidence(std::uint64_t seed) {
  CriterionResult r{10, "F(S^2_inf) = E(S^2_inf) sampled coincidence", false,
                    ""};
  const auto report = linf::s2_coincidence_sweep(500, seed, 4000);
  r.detail = std::to_string(report.accepted) + " minimal points, " +
             std::to_string(report.surrounding_pass) + " surrounding, " +
             std::to_string(report.mirror_pass) +
             " mirror-lemma passes; worst cone residual " +
             fmt(report.worst_cone_residual) + "; sample spacing " +
             fmt(report.sample_spacing);
  r.pass = report.accepted == 500 && report.pass();
  return r;
}

CriterionResult c11_cone_algebra(std::uint64_t seed) {
  CriterionResult r{11, "cone and interval algebra", false, ""};
  const std::size_t dim = 3;
  const double tol = 1e-9;
  // Cone partition.
  for (int t = 0; t < 10000; ++t) {
    Rng rng = Rng::stream(seed, 11000 + static_cast<std::uint64_t>(t));
    std::vector<double> pc(dim), zc(dim);
    for (auto& c : pc) c = rng.uniform(-5.0, 5.0);
    for (auto& c : zc) c = rng.uniform(-5.0, 5.0);
    const LinfPoint p{pc}, z{zc};
    bool covered = linf_dist(p, z) == 0.0;
    for (std::size_t i = 0; i < dim && !covered; ++i)
      for (int sign : {1, -1})
        if (linf::in_cone(linf::Cone{p, i, sign}, z, tol)) covered = true;
    if (!covered) {
      r.detail = "partition failure";
      return r;
    }
  }
  // Cone transitivity.
  for (int t = 0; t < 10000; ++t) {
    Rng rng = Rng::stream(seed, 21000 + static_cast<std::uint64_t>(t));
    const std::size_t axis = rng.uniform_index(dim);
    const int sign = rng.sign();
    std::vector<double> x(dim);
    for (auto& c : x) c = rng.uniform(-2.0, 2.0);
    auto step_in_cone = [&](const std::vector<double>& base) {
      std::vector<double> out(base);
      double biggest = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        if (j == axis) continue;
        const double d = rng.uniform(-1.0, 1.0);
        out[j] += d;
        biggest = std::max(biggest, std::abs(d));
      }
      out[axis] += sign * (biggest + rng.uniform(0.0, 1.0));
      return out;
    };
    const std::vector<double> y = step_in_cone(x);
    const std::vector<double> z = step_in_cone(y);
    if (!linf::in_cone(linf::Cone{LinfPoint{x}, axis, sign}, LinfPoint{z}, tol)) {
      r.detail = "transitivity failure";
      return r;
    }
  }
  // Interval decomposition.
  for (int t = 0; t < 10000; ++t) {
    Rng rng = Rng::stream(seed, 31000 + static_cast<std::uint64_t>(t));
    std::vector<double> xc(dim), yc(dim);
    for (auto& c : xc) c = rng.uniform(-2.0, 2.0);
    for (auto& c : yc) c = rng.uniform(-2.0, 2.0);
    const LinfPoint x{xc}, y{yc};
    std::vector<LinfPoint> probes;
    for (int q = 0; q < 10; ++q) {
      std::vector<double> zc(dim);
      for (auto& c : zc) c = rng.uniform(-4.0, 4.0);
      probes.push_back(LinfPoint{std::move(zc)});
    }
    for (const double lam : {0.0, 0.37, 1.0}) {
      std::vector<double> zc(dim);
      for (std::size_t j = 0; j < dim; ++j)
        zc[j] = (1.0 - lam) * xc[j] + lam * yc[j];
      probes.push_back(LinfPoint{std::move(zc)});
    }
    if (!linf::interval_decomposition_check(x, y, probes, tol)) {
      r.detail = "interval decomposition failure";
      return r;
    }
  }
  // Interval nesting, with z constructed inside I_xy via the cone
  // parametrization (z_i = x_i + xi u d on the dominating axis; each other
  // coordinate drawn from the non-empty slab intersection).
  auto sample_interval = [&](Rng& rng, const LinfPoint& a, const LinfPoint& b) {
    std::size_t axis = 0;
    double best = -1.0;
    double sgn = 1.0;
    for (std::size_t j = 0; j < dim; ++j) {
      const double gap = std::abs(b.coords[j] - a.coords[j]);
      if (gap > best) {
        best = gap;
        axis = j;
        sgn = b.coords[j] >= a.coords[j] ? 1.0 : -1.0;
      }
    }
    const double dist = linf_dist(a, b);
    const double u = rng.uniform(0.0, 1.0);
    std::vector<double> zc(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      if (j == axis) {
        zc[j] = a.coords[j] + sgn * u * dist;
        continue;
      }
      const double lo = std::max(a.coords[j] - u * dist,
                                 b.coords[j] - (1.0 - u) * dist);
      const double hi = std::min(a.coords[j] + u * dist,
                                 b.coords[j] + (1.0 - u) * dist);
      zc[j] = rng.uniform(lo, hi);
    }
    return LinfPoint{std::move(zc)};
  };
  for (int t = 0; t < 10000; ++t) {
    Rng rng = Rng::stream(seed, 41000 + static_cast<std::uint64_t>(t));
    std::vector<double> xc(dim), yc(dim);
    for (auto& c : xc) c = rng.uniform(-2.0, 2.0);
    for (auto& c : yc) c = rng.uniform(-2.0, 2.0);
    const LinfPoint x{xc}, y{yc};
    const LinfPoint z = sample_interval(rng, x, y);
    if (!linf::in_interval(x, y, z, tol)) {
      r.detail = "constructed point escaped its own interval";
      return r;
    }
    const LinfPoint w = sample_interval(rng, x, z);
    if (!linf::in_interval(x, y, w, tol)) {
      r.detail = "interval nesting failure";
      return r;
    }
  }
  r.pass = true;
  r.detail = "4 x 10^4 randomized trials at 1e-9, zero failures";
  return r;
}

CriterionResult c12_tree_vr(std::uint64_t seed) {
  CriterionResult r{12, "tree-like VR components vs single linkage", false, ""};
  for (int t = 0; t < 100; ++t) {
    Rng rng = Rng::stream(seed, 12000 + static_cast<std::uint64_t>(t));
    const std::size_t nodes = 4 + rng.uniform_index(27);
    const auto tree = random_tree_space(rng, nodes);
    if (four_point_delta(tree) != 0.0) {
      r.detail = "tree metric with nonzero four-point delta";
      return r;
    }
    const auto heights = single_linkage_heights(tree);
    for (const double h : vr::critical_scales(tree)) {
      const auto merged_closed = static_cast<std::size_t>(
          std::count_if(heights.begin(), heights.end(),
                        [&](double v) { return v <= h; }));
      const auto merged_open = static_cast<std::size_t>(
          std::count_if(heights.begin(), heights.end(),
                        [&](double v) { return v < h; }));
      if (vr::component_count(tree, h, false) != nodes - merged_closed ||
          vr::component_count(tree, h, true) != nodes - merged_open) {
        r.detail = "component count disagrees with the dendrogram";
        return r;
      }
    }
  }
  if (four_point_delta(span::circular_space(2)) != 2.0) {
    r.detail = "C_4 four-point delta is not 2";
    return r;
  }
  r.pass = true;
  r.detail = "100 trees, all critical scales, both strictness conventions";
  return r;
}

CriterionResult c13_hausdorff_convergence(std::uint64_t) {
  CriterionResult r{13, "Hausdorff convergence of (pi/k) C_2k to S^1", false,
                    ""};
  const std::size_t probes = 4096;
  const double probe_step = 2.0 * kPi / static_cast<double>(probes);
  double prev = std::numeric_limits<double>::infinity();
  std::string measured;
  for (const int k : {2, 4, 8, 16, 32}) {
    std::vector<CirclePoint> sample;
    for (int t = 0; t < 2 * k; ++t)
      sample.push_back(CirclePoint(kPi * static_cast<double>(t) / k));
    const double h = hausdorff_circle(sample, probes);
    const double expected = kPi / (2.0 * k);
    if (std::abs(h - expected) > probe_step) {
      r.detail = "k=" + std::to_string(k) + " measured " + fmt(h) +
                 " expected " + fmt(expected);
      return r;
    }
    if (!(h < prev)) {
      r.detail = "not monotone at k=" + std::to_string(k);
      return r;
    }
    prev = h;
    measured += (measured.empty() ? "" : ", ") + fmt(h);
  }
  r.pass = true;
  r.detail = "k in {2,4,8,16,32}: " + measured + " within one probe step";
  return r;
}

}  // namespace

CriterionResult run_one(int id, std::uint64_t seed) {
  switch (id) {
    case 1: return c1_circular_vertices(seed);
    case 2: return c2_projection(seed);
    case 3: return c3_circle_discretization(seed);
    case 4: return c4_center_radius(seed);
    case 5: return c5_complement_lemma(seed);
    case 6: return c6_retraction(seed);
    case 7: return c7_extreme_decomposition(seed);
    case 8: return c8_mountain_ranges(seed);
    case 9: return c9_linf_witness(seed);
    case 10: return c10_s2_coincidence(seed);
    case 11: return c11_cone_algebra(seed);
    case 12: return c12_tree_vr(seed);
    case 13: return c13_hausdorff_convergence(seed);
    default: throw PreconditionError("criterion id must be 1..13");
  }
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  out.reserve(13);
  for (int id = 1; id <= 13; ++id) out.push_back(run_one(id, seed));
  return out;
}

}  // namespace tightspan::acceptance
