#include <chrono>
#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tightspan/acceptance.hpp"
#include "tightspan/circle_span.hpp"
#include "tightspan/errors.hpp"
#include "tightspan/json_io.hpp"
#include "tightspan/linf_span.hpp"
#include "tightspan/metric_core.hpp"
#include "tightspan/parallel.hpp"
#include "tightspan/sphere_mountain.hpp"
#include "tightspan/tight_span.hpp"
#include "tightspan/vr_filtration.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tightspan;

constexpr int kExitVerdictFail = 1;
constexpr int kExitIo = 2;
constexpr int kExitSchema = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitConvergence = 6;

struct Output {
  std::string path;      // empty -> stdout
  std::string format;    // json | csv
  bool timestamp = true;
};

std::string csv_number(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

void flatten_csv(const ordered_json& j, const std::string& prefix,
                 std::ostream& os) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten_csv(value, name, os);
    } else if (value.is_number_float()) {
      os << name << "," << csv_number(value.get<double>()) << "\n";
    } else {
      os << name << "," << value.dump() << "\n";
    }
  }
}

void emit(const Output& out, ordered_json report) {
  if (out.timestamp) {
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    report["timestamp_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
  }
  std::string body;
  if (out.format == "csv") {
    std::ostringstream os;
    os << "key,value\n";
    flatten_csv(report, "", os);
    body = os.str();
  } else {
    body = report.dump(2) + "\n";
  }
  if (out.path.empty())
    std::cout << body;
  else
    io::save_text(out.path, body);
}

span::RadiusFunction values_from(const ordered_json& doc, const char* key) {
  if (!doc.contains(key))
    throw SchemaError(std::string("document needs \"") + key + "\"");
  span::RadiusFunction f;
  for (const auto& v : doc.at(key)) {
    if (!v.is_number()) throw SchemaError("function values must be numeric");
    f.push_back(v.get<double>());
  }
  return f;
}

int run_span_finite(const std::string& op, const std::string& input, int k,
                    const Output& out) {
  ordered_json report{{"command", "span-finite"}, {"op", op}};
  report["tolerances"] = {{"tol_metric", kTolMetric},
                          {"minimal_tol", 1e-6},
                          {"projection_stop", 1e-10}};
  if (op == "vertices") {
    const auto family = span::circular_vertex_family(k);
    const auto x = span::circular_space(k);
    bool all_minimal = true;
    for (const auto& h : family)
      all_minimal = all_minimal && span::is_minimal(x, h, 1e-9);
    report["k"] = k;
    report["count"] = family.size();
    report["all_minimal"] = all_minimal;
    report["vertices"] = family;
    emit(out, report);
    return all_minimal ? 0 : kExitVerdictFail;
  }
  const auto doc = io::load_json(input);
  const auto x = io::metric_space_from_json(
      doc.contains("space") ? doc.at("space") : doc);
  const auto f = values_from(doc, "f");
  report["space_size"] = x.size();
  if (op == "membership") {
    const bool ok = span::in_delta(x, f);
    report["in_delta"] = ok;
    emit(out, report);
    return ok ? 0 : kExitVerdictFail;
  }
  if (op == "minimal") {
    const bool ok = span::is_minimal(x, f);
    report["in_delta"] = true;
    report["is_minimal"] = ok;
    emit(out, report);
    return ok ? 0 : kExitVerdictFail;
  }
  if (op == "project") {
    const auto g = span::project_to_span(x, f);
    report["projection"] = g;
    report["sup_change"] = span::sup_dist(f, g);
    report["is_minimal"] = true;
    emit(out, report);
    return 0;
  }
  throw CLI::ValidationError("--op", "unknown span-finite operation " + op);
}

int run_circle(const std::string& op, const std::string& input,
               std::size_t grid, double r, int m, double t, double theta,
               std::uint64_t seed, const Output& out) {
  ordered_json report{{"command", "circle"}, {"op", op}};
  report["grid"] = grid;
  report["seed"] = seed;
  report["tolerances"] = {{"tol_grid", circle::tol_grid(grid)},
                          {"tol_band", circle::tol_grid(grid)},
                          {"tol_slope", 1e-6}};
  auto load_grid_function = [&]() -> circle::GridFunction {
    if (!input.empty())
      return io::grid_function_from_json(io::load_json(input));
    return circle::kuratowski_grid(grid, theta);
  };
  auto load_circle_function = [&]() -> circle::CircleGridFunction {
    if (input.empty()) return circle::kuratowski_circle(grid, theta);
    const auto doc = io::load_json(input);
    if (doc.contains("values") &&
        doc.at("values").size() == doc.at("n_cells").get<std::size_t>())
      return io::circle_function_from_json(doc);
    return circle::extend_to_circle(io::grid_function_from_json(doc));
  };

  if (op == "membership") {
    const auto f = load_grid_function();
    const bool ok = circle::in_F(f);
    report["in_F"] = ok;
    if (ok) report["in_E_after_extension"] = circle::in_E(circle::extend_to_circle(f));
    emit(out, report);
    return ok ? 0 : kExitVerdictFail;
  }
  if (op == "hA") {
    const auto a = io::interval_subset_from_json(io::load_json(input));
    const auto h = circle::h_A(a, grid);
    report["measure"] = a.measure();
    report["in_F"] = circle::in_F(h);
    report["is_extreme"] = circle::is_extreme(h);
    report["function"] = io::grid_function_to_json(h);
    emit(out, report);
    return 0;
  }
  if (op == "extreme") {
    const auto f = load_grid_function();
    const bool ok = circle::is_extreme(f);
    report["is_extreme"] = ok;
    emit(out, report);
    return ok ? 0 : kExitVerdictFail;
  }
  if (op == "decompose") {
    const auto f = load_grid_function();
    const auto res = circle::decompose_extreme(f, m, seed);
    report["samples"] = m;
    report["error"] = res.error;
    report["verdict"] = res.error <= 0.1;
    emit(out, report);
    return res.error <= 0.1 ? 0 : kExitVerdictFail;
  }
  if (op == "barycenter") {
    const auto f = load_circle_function();
    const CirclePoint b = circle::barycenter(f, r);
    report["r"] = r;
    report["barycenter"] = b.angle;
    emit(out, report);
    return 0;
  }
  if (op == "homotopy") {
    const auto f = load_circle_function();
    const auto h = circle::homotopy_step(f, t, r);
    report["r"] = r;
    report["t"] = t;
    report["in_E"] = circle::in_E(h);
    report["min_value"] = h.min_value();
    report["function"] = io::circle_function_to_json(h);
    emit(out, report);
    return circle::in_E(h) ? 0 : kExitVerdictFail;
  }
  if (op == "complement") {
    const auto f = load_circle_function();
    const auto outcome = circle::complement_lemma_check(f, r);
    report["r"] = r;
    report["outcome"] = outcome == circle::ComplementOutcome::Equivalent
                            ? "equivalent"
                            : outcome == circle::ComplementOutcome::Indeterminate
                                  ? "indeterminate"
                                  : "violated";
    emit(out, report);
    return outcome == circle::ComplementOutcome::Violated ? kExitVerdictFail : 0;
  }
  throw CLI::ValidationError("--op", "unknown circle operation " + op);
}

int run_mountain(const std::string& op, int m, int n, int resolution,
                 std::size_t grid_size, std::uint64_t seed, const Output& out) {
  ordered_json report{{"command", "mountain"}, {"op", op}};
  report["m"] = m;
  report["n"] = n;
  report["resolution"] = resolution;
  const auto config = mountain::build_P_mn(m, n, resolution);
  report["points"] = config.size();
  if (op == "build") {
    ordered_json pts = ordered_json::array();
    for (const auto& p : config.points) pts.push_back(p.coords);
    report["configuration"] = pts;
    emit(out, report);
    return 0;
  }
  if (op == "admissible") {
    mountain::SphereSampleGrid grid;
    if (n == 1)
      grid = mountain::circle_grid(std::max<std::size_t>(grid_size, 64));
    else if (n == 2)
      grid = mountain::fibonacci_grid(std::max<std::size_t>(grid_size / 2, 512));
    else
      grid = mountain::random_grid(static_cast<std::size_t>(n),
                                   std::max<std::size_t>(grid_size / 2, 512),
                                   seed);
    const auto rep = mountain::admissible_check(config, grid, seed);
    report["grid"] = grid.descriptor;
    report["max_residual"] = rep.max_residual;
    report["tol_sphere"] = rep.tol;
    report["lipschitz_ok"] = rep.lipschitz_ok;
    report["admissible"] = rep.pass;
    emit(out, report);
    return rep.pass ? 0 : kExitVerdictFail;
  }
  if (op == "extremal") {
    const bool held = mountain::is_pointwise_extremal(config);
    report["pointwise_extremal"] = held;
    emit(out, report);
    return held ? 0 : kExitVerdictFail;
  }
  throw CLI::ValidationError("--op", "unknown mountain operation " + op);
}

int run_linf(const std::string& op, std::size_t dim, const std::string& shape,
             double lambda, std::size_t samples, const std::string& point,
             std::uint64_t seed, const Output& out) {
  ordered_json report{{"command", "linf"}, {"op", op}};
  report["seed"] = seed;
  report["tolerances"] = {{"tol_cone_exact", linf::kTolConeExact},
                          {"dykstra_tol", 1e-9}};
  auto make_set = [&]() -> linf::SampledLinfSet {
    if (shape == "sphere") return linf::sample_sphere(dim, samples, seed);
    if (shape == "ball") return linf::sample_ball(dim, samples, seed);
    if (shape == "box") return linf::sample_box(dim, samples, seed);
    if (shape == "segment-apex") return linf::segment_plus_apex(samples);
    throw CLI::ValidationError("--shape", "unknown shape " + shape);
  };
  auto parse_point = [&]() -> LinfPoint {
    if (point.empty())
      throw SchemaError("this operation needs --point v1,v2,...");
    std::vector<double> coords;
    std::stringstream ss(point);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(std::stod(item));
    return LinfPoint{std::move(coords)};
  };

  if (op == "witness") {
    const auto wit = linf::witness_point(static_cast<int>(dim), lambda);
    report["n"] = wit.n;
    report["lambda"] = wit.lambda;
    report["lambda_max"] = linf::witness_lambda_max(wit.n);
    report["discriminant"] = wit.discriminant;
    report["point"] = wit.p.coords;
    report["verdict"] = wit.valid ? "VALID" : "INVALID";
    if (!wit.valid) report["reason"] = wit.reason;
    emit(out, report);
    return 0;  // both verdicts are successful computations
  }
  if (op == "surrounding" || op == "minimal") {
    const auto x = make_set();
    const auto p = parse_point();
    report["shape"] = shape;
    report["sample_size"] = x.points.size();
    report["sample_spacing"] = x.spacing;
    if (op == "surrounding") {
      // Per-cone residual: how far the cone stays from X (<= 0 means it hits).
      ordered_json cones = ordered_json::array();
      bool ok = true;
      for (std::size_t i = 0; i < x.dim(); ++i)
        for (int sign : {1, -1}) {
          const linf::Cone cone{p, i, sign};
          double residual;
          if (x.sphere)
            residual = linf::cone_min_distance(cone, x.sphere->center) -
                       x.sphere->radius;
          else if (x.ball)
            residual =
                linf::cone_min_distance(cone, x.ball->center) - x.ball->radius;
          else {
            residual = std::numeric_limits<double>::infinity();
            for (const auto& s : x.points)
              residual = std::min(residual, linf_dist(s, p) -
                                                sign * (s.coords[i] - p.coords[i]));
          }
          const bool hit = linf::cone_set_intersects(cone, x);
          ok = ok && hit;
          cones.push_back(ordered_json{{"axis", i},
                                       {"sign", sign},
                                       {"residual", residual},
                                       {"hit", hit}});
        }
      report["cones"] = cones;
      report["is_surrounding"] = ok;
      emit(out, report);
      return ok ? 0 : kExitVerdictFail;
    }
    const bool ok = linf::is_minimal_point(p, x);
    report["is_minimal"] = ok;
    emit(out, report);
    return ok ? 0 : kExitVerdictFail;
  }
  if (op == "coincidence") {
    const auto rep = linf::s2_coincidence_sweep(samples, seed);
    report["accepted"] = rep.accepted;
    report["surrounding_pass"] = rep.surrounding_pass;
    report["mirror_pass"] = rep.mirror_pass;
    report["worst_cone_residual"] = rep.worst_cone_residual;
    report["sample_spacing"] = rep.sample_spacing;
    report["verdict"] = rep.pass();
    emit(out, report);
    return rep.pass() ? 0 : kExitVerdictFail;
  }
  if (op == "convexity") {
    const auto x = make_set();
    const bool ok = linf::convexity_sweep(x, std::min<std::size_t>(samples, 200),
                                          seed);
    report["shape"] = shape;
    report["verdict"] = ok;
    emit(out, report);
    return ok ? 0 : kExitVerdictFail;
  }
  throw CLI::ValidationError("--op", "unknown linf operation " + op);
}

int run_vr(const std::string& op, const std::string& input, double scale,
           const std::string& strict, bool sweep, const Output& out) {
  ordered_json report{{"command", "vr"}, {"op", op}};
  if (op == "label") {
    report["scale"] = scale;
    report["label"] = vr::s1_homotopy_label(scale);
    emit(out, report);
    return 0;
  }
  const auto x = io::metric_space_from_json(io::load_json(input));
  const bool open = strict != "closed";
  if (op == "components") {
    if (sweep) {
      std::ostringstream os;
      os << "scale,count\n";
      for (const double s : vr::critical_scales(x))
        os << csv_number(s) << ","
           << vr::component_count(x, s, open) << "\n";
      if (out.path.empty())
        std::cout << os.str();
      else
        io::save_text(out.path, os.str());
      return 0;
    }
    report["scale"] = scale;
    report["strict"] = open ? "open" : "closed";
    report["components"] = vr::component_count(x, scale, open);
    emit(out, report);
    return 0;
  }
  if (op == "treecheck") {
    const double delta = four_point_delta(x);
    report["four_point_delta"] = delta;
    report["tree_like"] = vr::is_tree_like(x);
    emit(out, report);
    return 0;
  }
  throw CLI::ValidationError("--op", "unknown vr operation " + op);
}

int run_verify(const std::string& suite, int criterion, std::uint64_t seed,
               const Output& out) {
  std::vector<acceptance::CriterionResult> results;
  if (suite == "all" && criterion == 0) {
    results.resize(13);
    parallel_for(13, [&](std::size_t i) {
      results[i] = acceptance::run_one(static_cast<int>(i) + 1, seed);
    });
  } else {
    results.push_back(acceptance::run_one(criterion == 0 ? 1 : criterion, seed));
  }
  bool all_pass = true;
  ordered_json rows = ordered_json::array();
  for (const auto& res : results) {
    all_pass = all_pass && res.pass;
    std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << "criterion " << res.id
              << ": " << res.name << " — " << res.detail << "\n";
    rows.push_back(ordered_json{{"id", res.id},
                                {"name", res.name},
                                {"pass", res.pass},
                                {"detail", res.detail}});
  }
  ordered_json report{{"command", "verify"},
                      {"seed", seed},
                      {"criteria", rows},
                      {"all_pass", all_pass}};
  if (!out.path.empty()) emit(out, report);
  return all_pass ? 0 : kExitVerdictFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Numerical companion for the tight-span-of-spheres constructions: "
      "E(C_2k) vertices, the reduced tight span of S^1, mountain ranges, "
      "l-infinity cone geometry and Vietoris-Rips component counts."};
  app.require_subcommand(1);
  app.fallthrough();  // global flags remain valid after the subcommand name

  Output out;
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "RNG seed (default 0)")->capture_default_str();
  app.add_option("--output", out.path, "report file (default stdout)");
  app.add_option("--format", out.format, "json|csv")->default_val("json");
  app.add_flag_callback("--no-timestamp", [&] { out.timestamp = false; },
                        "omit the timestamp for byte-identical reports");

  // span-finite
  auto* sf = app.add_subcommand("span-finite", "Delta(X)/E(X) calculus");
  std::string sf_op = "membership";
  std::string sf_input;
  int sf_k = 2;
  sf->add_option("--op", sf_op, "membership|minimal|project|vertices");
  sf->add_option("--input", sf_input, "JSON: {labels, dist, f}");
  sf->add_option("--k", sf_k, "k for the C_2k vertex family");

  // circle
  auto* ci = app.add_subcommand("circle", "reduced tight span of S^1");
  std::string ci_op = "membership";
  std::string ci_input;
  std::size_t ci_grid = 360;
  double ci_r = std::numbers::pi / 4.0;
  int ci_m = 2000;
  double ci_t = 0.5;
  double ci_theta = 0.0;
  ci->add_option("--op", ci_op,
                 "membership|hA|extreme|decompose|barycenter|homotopy|complement");
  ci->add_option("--input", ci_input, "GridFunction or IntervalSubset JSON");
  ci->add_option("--grid", ci_grid, "cells N on [0, pi]");
  ci->add_option("--r", ci_r, "thickening radius");
  ci->add_option("--m", ci_m, "decomposition sample count");
  ci->add_option("--t", ci_t, "homotopy time in [0,1]");
  ci->add_option("--theta", ci_theta,
                 "base angle for the default Kuratowski input");

  // mountain
  auto* mo = app.add_subcommand("mountain", "mountain ranges on spheres");
  std::string mo_op = "admissible";
  int mo_m = 1, mo_n = 2, mo_res = 400;
  std::size_t mo_grid = 2400;
  mo->add_option("--op", mo_op, "admissible|extremal|build");
  mo->add_option("--m", mo_m, "odd-gon parameter");
  mo->add_option("--n", mo_n, "sphere dimension");
  mo->add_option("--resolution", mo_res, "latitude sampling resolution");
  mo->add_option("--grid-size", mo_grid, "sphere grid size");

  // linf
  auto* li = app.add_subcommand("linf", "l-infinity cone geometry");
  std::string li_op = "witness";
  std::string li_shape = "sphere";
  std::string li_point;
  std::size_t li_dim = 2;
  double li_lambda = 0.05;
  std::size_t li_samples = 500;
  li->add_option("--op", li_op,
                 "surrounding|minimal|witness|coincidence|convexity");
  li->add_option("--dim", li_dim, "n for S^n_inf (witness) or ambient dim");
  li->add_option("--shape", li_shape, "sphere|ball|box|segment-apex");
  li->add_option("--lambda", li_lambda, "witness offset");
  li->add_option("--samples", li_samples, "sample or sweep size");
  li->add_option("--point", li_point, "comma-separated candidate point");

  // vr
  auto* vrc = app.add_subcommand("vr", "Vietoris-Rips scale space");
  std::string vr_op = "components";
  std::string vr_input;
  std::string vr_strict = "open";
  double vr_scale = 1.0;
  bool vr_sweep = false;
  vrc->add_option("--op", vr_op, "components|treecheck|label");
  vrc->add_option("--input", vr_input, "FiniteMetricSpace JSON");
  vrc->add_option("--scale", vr_scale, "threshold scale");
  vrc->add_option("--strict", vr_strict, "open|closed");
  vrc->add_flag("--sweep", vr_sweep, "CSV sweep over all critical scales");

  // verify
  auto* ve = app.add_subcommand("verify", "acceptance suite");
  std::string ve_suite = "all";
  int ve_criterion = 0;
  ve->add_option("--suite", ve_suite, "all");
  ve->add_option("--criterion", ve_criterion, "run a single criterion (1..13)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sf->parsed()) return run_span_finite(sf_op, sf_input, sf_k, out);
    if (ci->parsed())
      return run_circle(ci_op, ci_input, ci_grid, ci_r, ci_m, ci_t, ci_theta,
                        seed, out);
    if (mo->parsed())
      return run_mountain(mo_op, mo_m, mo_n, mo_res, mo_grid, seed, out);
    if (li->parsed())
      return run_linf(li_op, li_dim, li_shape, li_lambda, li_samples, li_point,
                      seed, out);
    if (vrc->parsed())
      return run_vr(vr_op, vr_input, vr_scale, vr_strict, vr_sweep, out);
    if (ve->parsed()) return run_verify(ve_suite, ve_criterion, seed, out);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  }
  return 0;
}
