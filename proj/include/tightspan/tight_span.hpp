#pragma once

#include <vector>

#include "tightspan/metric_core.hpp"

namespace tightspan::span {

/// Function X -> R indexed like the space's points (an element of L^inf(X)).
using RadiusFunction = std::vector<double>;
/// Sign pattern sigma in {-1,+1}^k selecting a vertex of E(C_2k).
using SignVector = std::vector<int>;

double sup_dist(const RadiusFunction& f, const RadiusFunction& g);

/// f(x) + f(x') >= d(x,x') for all pairs, within tol.
bool in_delta(const FiniteMetricSpace& x, const RadiusFunction& f,
              double tol = kTolMetric);

/// E(X) membership for finite X: every point attains equality with some
/// partner. Precondition: in_delta (reported distinctly).
bool is_minimal(const FiniteMetricSpace& x, const RadiusFunction& f,
                double tol = kTolMetric);

struct ProjectionOptions {
  double stop_tol = 1e-10;   // sup-change between iterates
  int max_iter = 100000;
  double minimal_tol = 1e-6; // post-hoc minimality assertion
};

/// Minimal minorant of f via the averaging iteration g <- (g + q(g))/2 with
/// q(g)(x) = max_x' (d(x,x') - g(x')). Which minimal minorant is returned is
/// implementation-defined; the output satisfies g <= f, in_delta, is_minimal.
RadiusFunction project_to_span(const FiniteMetricSpace& x,
                               const RadiusFunction& f,
                               const ProjectionOptions& opt = {});

/// d(x0, .) as a row of the table.
RadiusFunction kuratowski(const FiniteMetricSpace& x, std::size_t point);
RadiusFunction kuratowski(const FiniteMetricSpace& x, const std::string& label);

/// Circular graph C_2k with the shortest-path metric, vertices "1".."2k".
FiniteMetricSpace circular_space(int k);

/// Vertex h_sigma = k/2 + sum_i sigma_i g_i of E(C_2k); g_i is +1/2 on the
/// k consecutive vertices starting at i and -1/2 elsewhere.
RadiusFunction circular_vertex(int k, const SignVector& sigma);

/// All 2^k vertices, ordered by the bit pattern of sigma. Capped at k <= 16.
std::vector<RadiusFunction> circular_vertex_family(int k);

/// Mountain-range extension of f from the subset P (given by indices into X):
/// g(x) = min_i (d(x, p_i) + f(p_i)). Requires f in Delta(P).
RadiusFunction extend_via_mr(const FiniteMetricSpace& x,
                             const std::vector<std::size_t>& subset,
                             const RadiusFunction& f_on_subset);

/// Is (f+g)/2 minimal? Requires both inputs minimal.
bool midpoint_minimality_probe(const FiniteMetricSpace& x,
                               const RadiusFunction& f,
                               const RadiusFunction& g);

}  // namespace tightspan::span
