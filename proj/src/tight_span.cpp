#include "tightspan/tight_span.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tightspan/errors.hpp"

namespace tightspan::span {

namespace {

void require_same_length(const FiniteMetricSpace& x, const RadiusFunction& f) {
  if (f.size() != x.size())
    throw PreconditionError("function length does not match space size");
  for (double v : f)
    if (!std::isfinite(v)) throw PreconditionError("non-finite function value");
}

}  // namespace

double sup_dist(const RadiusFunction& f, const RadiusFunction& g) {
  if (f.size() != g.size()) throw PreconditionError("length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    m = std::max(m, std::abs(f[i] - g[i]));
  return m;
}

bool in_delta(const FiniteMetricSpace& x, const RadiusFunction& f, double tol) {
  require_same_length(x, f);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i; j < x.size(); ++j)
      if (f[i] + f[j] < x.d(i, j) - tol) return false;
  return true;
}

bool is_minimal(const FiniteMetricSpace& x, const RadiusFunction& f, double tol) {
  if (!in_delta(x, f, tol))
    throw PreconditionError("is_minimal requires f in Delta(X)");
  for (std::size_t i = 0; i < x.size(); ++i) {
    bool attained = false;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (std::abs(f[i] + f[j] - x.d(i, j)) <= tol) {
        attained = true;
        break;
      }
    }
    if (!attained) return false;
  }
  return true;
}

RadiusFunction project_to_span(const FiniteMetricSpace& x,
                               const RadiusFunction& f,
                               const ProjectionOptions& opt) {
  if (!in_delta(x, f))
    throw PreconditionError("project_to_span requires f in Delta(X)");
  const std::size_t n = x.size();
  RadiusFunction g = f;
  RadiusFunction q(n);
  double change = 0.0;
  bool converged = false;
  for (int iter = 0; iter < opt.max_iter; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double m = -g[i];  // x' = x term: d(x,x) - g(x)
      for (std::size_t j = 0; j < n; ++j) m = std::max(m, x.d(i, j) - g[j]);
      q[i] = m;
    }
    change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double next = 0.5 * (g[i] + q[i]);
      change = std::max(change, std::abs(next - g[i]));
      g[i] = next;
    }
    if (change < opt.stop_tol) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw ConvergenceError("project_to_span did not converge; final residual " +
                           std::to_string(change));
  if (!is_minimal(x, g, opt.minimal_tol))
    throw ConvergenceError("projection output failed the minimality assertion");
  return g;
}

RadiusFunction kuratowski(const FiniteMetricSpace& x, std::size_t point) {
  if (point >= x.size()) throw PreconditionError("point index out of range");
  return x.dist[point];
}

RadiusFunction kuratowski(const FiniteMetricSpace& x, const std::string& label) {
  return kuratowski(x, x.index_of(label));
}

FiniteMetricSpace circular_space(int k) {
  if (k < 1) throw PreconditionError("circular_space requires k >= 1");
  const int n = 2 * k;
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int gap = std::abs(i - j);
      dist[i][j] = static_cast<double>(std::min(gap, n - gap));
    }
  return FiniteMetricSpace::from_table(std::move(dist));
}

RadiusFunction circular_vertex(int k, const SignVector& sigma) {
  if (k < 1) throw PreconditionError("circular_vertex requires k >= 1");
  if (sigma.size() != static_cast<std::size_t>(k))
    throw PreconditionError("sign vector length must equal k");
  for (int s : sigma)
    if (s != 1 && s != -1) throw PreconditionError("signs must be +-1");
  const int n = 2 * k;
  RadiusFunction h(n);
  for (int v = 0; v < n; ++v) {
    // Vertices are 1-based in the construction; v is the 0-based index.
    double acc = 0.5 * k;
    for (int i = 1; i <= k; ++i) {
      const int offset = ((v + 1 - i) % n + n) % n;
      const double gi = offset < k ? 0.5 : -0.5;
      acc += sigma[static_cast<std::size_t>(i - 1)] * gi;
    }
    h[static_cast<std::size_t>(v)] = acc;
  }
  return h;
}

std::vector<RadiusFunction> circular_vertex_family(int k) {
  if (k < 1) throw PreconditionError("circular_vertex_family requires k >= 1");
  if (k > 16)
    throw PreconditionError("vertex family enumeration capped at k <= 16");
  std::vector<RadiusFunction> family;
  family.reserve(std::size_t{1} << k);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    SignVector sigma(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) sigma[i] = (mask >> i) & 1u ? 1 : -1;
    family.push_back(circular_vertex(k, sigma));
  }
  return family;
}

RadiusFunction extend_via_mr(const FiniteMetricSpace& x,
                             const std::vector<std::size_t>& subset,
                             const RadiusFunction& f_on_subset) {
  if (subset.empty()) throw PreconditionError("empty subset");
  if (subset.size() != f_on_subset.size())
    throw PreconditionError("subset and function lengths differ");
  for (std::size_t p : subset)
    if (p >= x.size()) throw PreconditionError("subset index out of range");
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a; b < subset.size(); ++b)
      if (f_on_subset[a] + f_on_subset[b] <
          x.d(subset[a], subset[b]) - kTolMetric)
        throw PreconditionError("extend_via_mr requires f in Delta(P)");
  RadiusFunction g(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < subset.size(); ++a)
      m = std::min(m, x.d(v, subset[a]) + f_on_subset[a]);
    g[v] = m;
  }
  return g;
}

bool midpoint_minimality_probe(const FiniteMetricSpace& x,
                               const RadiusFunction& f,
                               const RadiusFunction& g) {
  if (!is_minimal(x, f) || !is_minimal(x, g))
    throw PreconditionError("midpoint probe requires minimal inputs");
  RadiusFunction mid(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mid[i] = 0.5 * (f[i] + g[i]);
  return is_minimal(x, mid);
}

}  // namespace tightspan::span
