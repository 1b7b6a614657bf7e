#include "rainbow/json_io.hpp"

#include <fstream>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

using nlohmann::json;

json weight_to_json(const Rational& w) {
    if (is_integer(w) && fits_int64(w.get_num())) return to_int64(w.get_num());
    return to_string(w);
}

Rational weight_from_json(const json& j) {
    if (j.is_number_integer()) return make_rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("weights must be integers or \"num/den\" strings");
}

}  // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, weight_to_json(e.w)});
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON needs \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
    int n = j["n"].get<int>();
    std::vector<Edge> edges;
    if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (const json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3) throw ParseError("each edge is [u, v, w]");
        if (!e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("edge endpoints must be integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>(), weight_from_json(e[2]));
    }
    return Graph(n, std::move(edges));
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return graph_from_json(j);
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << graph_to_json(g).dump(2) << '\n';
}

json report_to_json(const RainbowReport& r) {
    json j;
    j["method"] = r.method;
    if (r.tau) j["tau"] = to_string(*r.tau);
    if (r.witness) j["witness"] = r.witness->to_vector();
    if (r.spectral_lower) j["spectral_lower"] = *r.spectral_lower;
    if (r.spectral_upper) j["spectral_upper"] = *r.spectral_upper;
    if (r.rounds_required) j["rounds_required"] = *r.rounds_required;
    return j;
}

json stats_to_json(const GraphStats& st) {
    return json{{"total_edge_weight", to_string(st.total_edge_weight)},
                {"max_degree", to_string(st.max_degree)}};
}

json trace_to_json(const ProtocolTrace& trace) {
    json rounds = json::array();
    for (const Round& r : trace.rounds) {
        rounds.push_back(json{
            {"F", r.f}, {"K", r.k}, {"value", r.value}, {"paths", r.paths}});
    }
    return json{{"rounds", rounds}};
}

json verification_to_json(const VerificationReport& rep, const Rational& tau) {
    return json{{"tau", to_string(tau)},
                {"per_round_flow_ok", rep.per_round_flow_ok},
                {"round_bound_ok", rep.round_bound_ok},
                {"perfect_matching_ok", rep.perfect_matching_ok},
                {"capacity_ok", rep.capacity_ok},
                {"observed_rounds", rep.observed_rounds},
                {"round_bound", rep.round_bound},
                {"tau_ceil", rep.tau_ceil},
                {"within_tau_ceil", rep.within_tau_ceil},
                {"all_ok", rep.all_ok()}};
}

json hierarchy_eval_to_json(const HierarchyEval& eval) {
    json candidates = json::array();
    for (const LevelCandidate& c : eval.per_level_candidates)
        candidates.push_back(json{{"level", c.level}, {"value", to_string(c.value)}});
    return json{{"tau_closed_form", to_string(eval.tau_closed_form)},
                {"dominating_option", eval.dominating_option},
                {"per_level_candidates", candidates},
                {"stats", stats_to_json(eval.stats)},
                {"realized_n", eval.realized_n.get_str()}};
}

json comparison_to_json(const ComparisonReport& rep) {
    return json{{"n", rep.n},
                {"alpha", to_string(rep.alpha)},
                {"k", rep.k},
                {"d", rep.d},
                {"hierarchy_tau_scaling", rep.hierarchy_tau_scaling},
                {"grid_tau_scaling", rep.grid_tau_scaling},
                {"weight_condition_met", rep.weight_condition_met},
                {"verdict", rep.verdict},
                {"hierarchy_n", rep.hierarchy_n.get_str()},
                {"hierarchy_tau", to_string(rep.hierarchy_tau)},
                {"hierarchy_stats", stats_to_json(rep.hierarchy_stats)},
                {"grid_side", rep.grid_side.get_str()},
                {"grid_n", rep.grid_n.get_str()},
                {"grid_tau_slab", to_string(rep.grid_tau_slab)},
                {"grid_stats", stats_to_json(rep.grid_stats)}};
}

}  // namespace rainbow
