#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "koebe/adm_lower.hpp"
#include "koebe/coins.hpp"
#include "koebe/graph.hpp"

namespace koebe {

using json = nlohmann::json;

/// {"n", "edges", "rotation"?}
json graph_to_json(const PlanarGraph& g);
PlanarGraph graph_from_json(const json& j);

/// Array of vertex ids, minimum first.
json ordering_to_json(const VertexOrdering& ord);
VertexOrdering ordering_from_json(const json& j, int n);

/// {"discs": [{"id", "x", "y", "r"}, ...]}; ids must cover 0..n-1.
json model_to_json(const CoinModel& m);
CoinModel model_from_json(const json& j);

/// {"kind", "paths"} plus "w" and "s" for P and Q families.
json witness_to_json(const WitnessFamily& f);
WitnessFamily witness_from_json(const json& j);

json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// 17 significant digits.
std::string format_double(double x);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace koebe
