#pragma once

#include <string>

#include "json.hpp"
#include "rainbow/capacity.hpp"
#include "rainbow/families.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/hierarchy.hpp"
#include "rainbow/isoperimetric.hpp"
#include "rainbow/protocol.hpp"

namespace rainbow {

// Conventions: rational quantities appear as "num/den" strings ("7" when the
// denominator is 1), except edge weights, which are written as plain JSON
// integers whenever they are integral. Counts and ids are JSON integers;
// spectral bounds and scaling exponents are floats. Keys serialize sorted,
// so identical data gives identical bytes.

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

nlohmann::json report_to_json(const RainbowReport& r);
nlohmann::json stats_to_json(const GraphStats& st);
nlohmann::json trace_to_json(const ProtocolTrace& trace);
nlohmann::json verification_to_json(const VerificationReport& rep, const Rational& tau);
nlohmann::json hierarchy_eval_to_json(const HierarchyEval& eval);
nlohmann::json comparison_to_json(const ComparisonReport& rep);

}  // namespace rainbow
