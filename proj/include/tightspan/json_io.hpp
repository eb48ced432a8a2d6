#pragma once

#include <string>

#include <json.hpp>

#include "tightspan/circle_span.hpp"
#include "tightspan/linf_span.hpp"
#include "tightspan/metric_core.hpp"

namespace tightspan::io {

/// Parses {"labels": [...], "dist": [[...]]}; throws SchemaError on shape or
/// metric-axiom violations.
FiniteMetricSpace metric_space_from_json(const nlohmann::json& j);
nlohmann::json metric_space_to_json(const FiniteMetricSpace& x);

/// Parses {"n_cells": N, "values": [...]} (N+1 values on [0, pi]).
circle::GridFunction grid_function_from_json(const nlohmann::json& j);
nlohmann::json grid_function_to_json(const circle::GridFunction& f);

/// Parses {"n_cells": 2N, "values": [...]} (2N values on the circle).
circle::CircleGridFunction circle_function_from_json(const nlohmann::json& j);
nlohmann::json circle_function_to_json(const circle::CircleGridFunction& f);

/// Parses {"intervals": [[a, b], ...]}.
circle::IntervalSubset interval_subset_from_json(const nlohmann::json& j);
nlohmann::json interval_subset_to_json(const circle::IntervalSubset& a);

LinfPoint linf_point_from_json(const nlohmann::json& j);

/// Reads a whole JSON document; throws IoError / SchemaError.
nlohmann::json load_json(const std::string& path);
void save_text(const std::string& path, const std::string& body);

}  // namespace tightspan::io
