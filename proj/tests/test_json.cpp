#include "doctest.h"

#include "rainbow/json_io.hpp"
#include "rainbow/families.hpp"
#include "rainbow/isoperimetric.hpp"
#include "rainbow/protocol.hpp"
#include "rainbow/errors.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace rainbow;
using nlohmann::json;

TEST_CASE("graph JSON round-trip") {
    for (const Graph& g : {complete_graph(5), path_graph(4), grid_graph({2, 3}),
                           scale_weights(cycle_graph(4), make_rational(1, 2))}) {
        Graph back = graph_from_json(graph_to_json(g));
        CHECK(back == g);
    }
}

TEST_CASE("integral weights serialize as JSON integers") {
    json j = graph_to_json(path_graph(3));
    CHECK(j["n"] == 3);
    REQUIRE(j["edges"].size() == 2);
    CHECK(j["edges"][0] == json::array({0, 1, 1}));
    CHECK(j["edges"][0][2].is_number_integer());

    json h = graph_to_json(scale_weights(path_graph(3), make_rational(3, 2)));
    CHECK(h["edges"][0][2] == "3/2");
}

TEST_CASE("graph JSON parse errors") {
    CHECK_THROWS_AS(graph_from_json(json{{"n", 3}}), ParseError);
    CHECK_THROWS_AS(graph_from_json(json{{"edges", json::array()}}), ParseError);
    CHECK_THROWS_AS(graph_from_json(json{{"n", "three"}, {"edges", json::array()}}),
                    ParseError);
    CHECK_THROWS_AS(
        graph_from_json(json{{"n", 2}, {"edges", json::array({json::array({0, 1})})}}),
        ParseError);
    CHECK_THROWS_AS(
        graph_from_json(json{{"n", 2}, {"edges", json::array({json::array({0, 1, 2.5})})}}),
        ParseError);
    // structurally valid JSON but an invalid graph surfaces the graph error
    CHECK_THROWS_AS(
        graph_from_json(json{{"n", 2}, {"edges", json::array({json::array({0, 0, 1})})}}),
        InvalidEdge);
}

TEST_CASE("graph file round-trip") {
    namespace fs = std::filesystem;
    fs::path p = fs::temp_directory_path() / "rainbow_json_roundtrip.json";
    Graph g = grid_graph({2, 3});
    save_graph(g, p.string());
    Graph back = load_graph(p.string());
    CHECK(back == g);
    std::remove(p.string().c_str());
    CHECK_THROWS_AS(load_graph(p.string()), ParseError);
}

TEST_CASE("malformed file contents raise ParseError") {
    namespace fs = std::filesystem;
    fs::path p = fs::temp_directory_path() / "rainbow_json_malformed.json";
    {
        std::ofstream out(p);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_graph(p.string()), ParseError);
    std::remove(p.string().c_str());
}

TEST_CASE("rainbow report JSON shape") {
    RainbowReport r = rainbow_time_exact(complete_graph(4));
    json j = report_to_json(r);
    CHECK(j["tau"] == "1/2");
    CHECK(j["witness"] == json::array({0, 1}));
    CHECK(j["rounds_required"] == 1);
    CHECK(j["method"] == "exact");
    CHECK(j["spectral_lower"].is_number_float());
    CHECK(j["spectral_upper"].is_number_float());

    RainbowReport u = unrestricted_rainbow_time(complete_graph(4), 0);
    json ju = report_to_json(u);
    CHECK(ju["tau"] == "1");
    CHECK(!ju.contains("spectral_lower"));
}

TEST_CASE("trace and verification JSON shapes") {
    Graph p4 = path_graph(4);
    VertexSet f = VertexSet::from_vertices(4, {0, 1});
    VertexSet k = VertexSet::from_vertices(4, {2, 3});
    ProtocolTrace trace = run_protocol(p4, f, k);
    json jt = trace_to_json(trace);
    REQUIRE(jt["rounds"].size() == 2);
    CHECK(jt["rounds"][0]["F"] == json::array({0, 1}));
    CHECK(jt["rounds"][0]["K"] == json::array({2, 3}));
    CHECK(jt["rounds"][0]["value"] == 1);
    CHECK(jt["rounds"][0]["paths"] == json::array({json::array({1, 2})}));

    Rational tau(2);
    VerificationReport rep = verify_trace(p4, f, k, trace, tau);
    json jv = verification_to_json(rep, tau);
    CHECK(jv["tau"] == "2");
    CHECK(jv["all_ok"] == true);
    CHECK(jv["observed_rounds"] == 2);
}

TEST_CASE("stats and hierarchy JSON shapes") {
    json js = stats_to_json(graph_stats(complete_graph(4)));
    CHECK(js["total_edge_weight"] == "6");
    CHECK(js["max_degree"] == "3");

    HierarchyEval ev = kn_hierarchy_rainbow_time(4, 2, Rational(1));
    json je = hierarchy_eval_to_json(ev);
    CHECK(je["tau_closed_form"] == "2");
    CHECK(je["dominating_option"] == "top");
    CHECK(je["realized_n"] == "16");

    ComparisonReport cr = compare_to_grid(4, Rational(2), 2, 2);
    json jc = comparison_to_json(cr);
    CHECK(jc["verdict"] == true);
    CHECK(jc["hierarchy_n"] == "16");
    CHECK(jc["alpha"] == "2");
}

TEST_CASE("serialization is byte-stable") {
    Graph g = grid_graph({2, 3});
    CHECK(graph_to_json(g).dump() == graph_to_json(g).dump());
    RainbowReport r = rainbow_time_exact(g);
    CHECK(report_to_json(r).dump() == report_to_json(r).dump());
}
