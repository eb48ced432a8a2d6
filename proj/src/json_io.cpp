#include "tightspan/json_io.hpp"

#include <fstream>
#include <sstream>

#include "tightspan/errors.hpp"

namespace tightspan::io {

namespace {

std::vector<double> number_array(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw SchemaError(std::string(what) + " must be numeric");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

FiniteMetricSpace metric_space_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dist"))
    throw SchemaError("metric space document needs a \"dist\" table");
  std::vector<std::vector<double>> dist;
  for (const auto& row : j.at("dist")) dist.push_back(number_array(row, "dist row"));
  if (j.contains("labels")) {
    std::vector<std::string> labels;
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw SchemaError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    return FiniteMetricSpace::create(std::move(labels), std::move(dist));
  }
  return FiniteMetricSpace::from_table(std::move(dist));
}

nlohmann::json metric_space_to_json(const FiniteMetricSpace& x) {
  return nlohmann::json{{"labels", x.labels}, {"dist", x.dist}};
}

circle::GridFunction grid_function_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n_cells") || !j.contains("values"))
    throw SchemaError("grid function needs \"n_cells\" and \"values\"");
  const auto n = j.at("n_cells").get<std::size_t>();
  auto values = number_array(j.at("values"), "values");
  if (values.size() != n + 1)
    throw SchemaError("grid function needs n_cells + 1 values");
  return circle::GridFunction(n, values);
}

nlohmann::json grid_function_to_json(const circle::GridFunction& f) {
  return nlohmann::json{{"n_cells", f.n_cells()}, {"values", f.values()}};
}

circle::CircleGridFunction circle_function_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n_cells") || !j.contains("values"))
    throw SchemaError("circle function needs \"n_cells\" and \"values\"");
  const auto n = j.at("n_cells").get<std::size_t>();
  auto values = number_array(j.at("values"), "values");
  if (values.size() != n)
    throw SchemaError("circle function needs n_cells values");
  return circle::CircleGridFunction(n, values);
}

nlohmann::json circle_function_to_json(const circle::CircleGridFunction& f) {
  return nlohmann::json{{"n_cells", f.n_cells()}, {"values", f.values()}};
}

circle::IntervalSubset interval_subset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("intervals"))
    throw SchemaError("interval subset needs \"intervals\"");
  std::vector<std::pair<double, double>> intervals;
  for (const auto& pair : j.at("intervals")) {
    const auto nums = number_array(pair, "interval");
    if (nums.size() != 2) throw SchemaError("intervals must be [a, b] pairs");
    intervals.emplace_back(nums[0], nums[1]);
  }
  try {
    return circle::IntervalSubset(std::move(intervals));
  } catch (const PreconditionError& e) {
    throw SchemaError(e.what());
  }
}

nlohmann::json interval_subset_to_json(const circle::IntervalSubset& a) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [lo, hi] : a.intervals())
    arr.push_back(nlohmann::json::array({lo, hi}));
  return nlohmann::json{{"intervals", arr}};
}

LinfPoint linf_point_from_json(const nlohmann::json& j) {
  return LinfPoint{number_array(j, "point")};
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_text(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << body;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace tightspan::io
