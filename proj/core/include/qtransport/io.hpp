// Copyright 2026 The qtransport Authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qtransport/cost.hpp"
#include "qtransport/cvrp.hpp"
#include "qtransport/traffic.hpp"
#include "qtransport/tsp.hpp"

namespace qtransport {

using json = nlohmann::json;

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

/// Row per line, comma separated, every value via format_double.
std::string matrix_to_csv(const std::vector<std::vector<double>>& matrix);

/// Inverse of matrix_to_csv. Throws FormatError on ragged rows or bad numbers.
std::vector<std::vector<double>> matrix_from_csv(std::string_view text);

// Model documents:
//   QUBO  {"num_vars", "offset", "linear": [[i, c]...], "quadratic": [[i, j, c]...]}
//   HOBO  the same plus "terms": [[[i, j, k, ...], c]...]
// Loaders throw FormatError naming the field for out-of-range indices,
// non-finite coefficients and missing or mistyped fields.

json to_json(const QuboModel& model);
json to_json(const PseudoBooleanPolynomial& poly);
/// Ising models are written as their exact QUBO equivalent.
json to_json(const CostFunction& cost);

QuboModel qubo_from_json(const json& doc);
PseudoBooleanPolynomial hobo_from_json(const json& doc);
/// HOBO when the document carries "terms", QUBO otherwise.
CostFunction cost_from_json(const json& doc);

// Problem documents.
TspInstance tsp_from_json(const json& doc);               // {"distance": [[...]]}
json to_json(const TspInstance& inst);
TrafficGrid traffic_from_json(const json& doc);           // {"rows","cols","q_ns","q_ew","prev","A","B","G"}
json to_json(const TrafficGrid& grid);
CvrpInstance cvrp_from_json(const json& doc);             // {"depot","customers","capacity","vehicles"}
json to_json(const CvrpInstance& inst);

json parse_json(std::string_view text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace qtransport
