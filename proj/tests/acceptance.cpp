// Acceptance suite: one PASS/FAIL line per criterion, exit code = number of
// failing criteria. argv[1] is the path to the rbtk binary (used by the
// determinism criterion).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/capacity.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/families.hpp"
#include "rainbow/flow.hpp"
#include "rainbow/hierarchy.hpp"
#include "rainbow/isoperimetric.hpp"
#include "rainbow/json_io.hpp"
#include "rainbow/protocol.hpp"
#include "matrix.hpp"
#include "oracles.hpp"

using namespace rainbow;

namespace {

int failures = 0;
std::vector<std::string> notes;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

bool check_named_tau(const Graph& g, const Rational& expected, std::string& why,
                     const std::string& label) {
    ExactOptions unpruned;
    unpruned.prune_connected = false;
    Rational pruned_tau = *rainbow_time_exact(g).tau;
    Rational raw_tau = *rainbow_time_exact(g, unpruned).tau;
    Rational brute = oracle::naive_tau(g);
    if (pruned_tau != expected || raw_tau != expected || brute != expected) {
        why += label + " gave " + to_string(pruned_tau) + "/" + to_string(raw_tau) + "/" +
               to_string(brute) + " expected " + to_string(expected) + "; ";
        return false;
    }
    return true;
}

void criterion_exact_values() {
    std::string why;
    bool ok = true;
    ok &= check_named_tau(complete_graph(4), make_rational(1, 2), why, "K_4");
    ok &= check_named_tau(complete_graph(6), make_rational(1, 3), why, "K_6");
    ok &= check_named_tau(star_graph(6), Rational(1), why, "S_6");
    for (int n : {4, 6, 8, 10})
        ok &= check_named_tau(path_graph(n), Rational(n / 2), why, "P_" + std::to_string(n));
    ok &= check_named_tau(grid_graph({4, 4}), Rational(2), why, "4x4 grid");
    report(1, "exact rainbow times match brute force", ok, why);
}

double family_slope(const std::vector<int>& sizes, const std::string& family) {
    std::vector<std::pair<double, double>> pts;
    for (int n : sizes) {
        Graph g = family == "complete" ? complete_graph(n)
                  : family == "star"   ? star_graph(n)
                  : family == "path"   ? path_graph(n)
                                       : grid_graph({n, n});
        int vertices = family == "grid" ? n * n : n;
        ExactOptions opt;
        opt.max_n = 26;  // the 5x5 grid sits just past the default cap
        Rational tau = *rainbow_time_exact(g, opt).tau;
        pts.push_back({static_cast<double>(vertices), tau.get_d()});
    }
    return oracle::loglog_slope(pts);
}

void criterion_slopes() {
    std::ostringstream detail;
    bool ok = true;

    double k_slope = family_slope({4, 5, 6, 7, 8, 9, 10, 11, 12}, "complete");
    ok &= std::abs(k_slope - (-1.0)) <= 0.1;
    double s_slope = family_slope({4, 5, 6, 7, 8, 9, 10, 11, 12}, "star");
    ok &= std::abs(s_slope) <= 0.05;
    double p_slope = family_slope({4, 6, 8, 10, 12, 14, 16}, "path");
    ok &= std::abs(p_slope - 1.0) <= 0.05;
    double g_slope = family_slope({2, 3, 4, 5}, "grid");
    ok &= std::abs(g_slope - 0.5) <= 0.1;

    detail.precision(3);
    detail << "K_N " << k_slope << ", S_N " << s_slope << ", paths " << p_slope
           << ", grids " << g_slope;
    report(2, "scaling slopes match the family table", ok, detail.str());
}

void criterion_closed_forms() {
    std::string why;
    bool ok = true;

    std::vector<Graph> factors = {complete_graph(2), complete_graph(3), path_graph(2),
                                  path_graph(3), star_graph(4)};
    for (const Graph& h1 : factors)
        for (const Graph& h2 : factors) {
            if (h1.vertex_count() * h2.vertex_count() > 20) continue;
            Rational closed = hp_rainbow_time(oracle::naive_tau(h1), oracle::naive_u(h2, 0),
                                              h2.vertex_count());
            Rational brute = oracle::naive_tau(hierarchical_product(h1, h2, 1, 1));
            if (closed != brute) {
                ok = false;
                why += "product " + std::to_string(h1.vertex_count()) + "x" +
                       std::to_string(h2.vertex_count()) + "; ";
            }
        }

    std::vector<Graph> bases = {complete_graph(2), complete_graph(3), complete_graph(4),
                                path_graph(3), star_graph(4)};
    std::vector<std::vector<Rational>> weight_menu = {
        {Rational(1)},
        {Rational(2)},
        {Rational(1), Rational(1)},
        {Rational(1), Rational(2)},
        {Rational(2), Rational(1)},
        {make_rational(1, 2), Rational(1)},
        {Rational(1), Rational(1), Rational(1)},
        {Rational(1), Rational(2), Rational(4)},
    };
    for (const Graph& g : bases)
        for (const auto& alpha : weight_menu) {
            int k = static_cast<int>(alpha.size());
            double size = std::pow(static_cast<double>(g.vertex_count()), k);
            if (size > 20) continue;
            HierarchyEval ev = hierarchy_rainbow_time(oracle::naive_tau(g),
                                                      oracle::naive_u(g, 0),
                                                      g.vertex_count(), k, alpha);
            Rational brute = oracle::naive_tau(hierarchy(g, k, alpha));
            if (ev.tau_closed_form != brute) {
                ok = false;
                why += "hierarchy n=" + std::to_string(g.vertex_count()) + " k=" +
                       std::to_string(k) + "; ";
            }
        }

    // the two pinned instances
    Rational k4k4 = hp_rainbow_time(make_rational(1, 2), Rational(1), 4);
    Graph k4sq = hierarchical_product(complete_graph(4), complete_graph(4), 1, 1);
    if (k4k4 != Rational(2) || oracle::naive_tau(k4sq) != Rational(2)) {
        ok = false;
        why += "K_4 over K_4 != 2; ";
    }
    HierarchyEval kn = kn_hierarchy_rainbow_time(4, 2, Rational(2));
    Graph weighted = hierarchy(complete_graph(4), 2, {Rational(1), Rational(2)});
    if (kn.tau_closed_form != Rational(1) || oracle::naive_tau(weighted) != Rational(1)) {
        ok = false;
        why += "weighted K_4 tower != 1; ";
    }
    report(3, "hierarchy closed forms equal brute force", ok, why);
}

void criterion_spectral() {
    int graphs = 0;
    bool ok = true;
    std::string why;
    for (const auto& entry : testmatrix::build()) {
        const Graph& g = entry.graph;
        if (g.vertex_count() > 16) continue;
        ++graphs;
        double tau = rainbow_time_exact(g).tau->get_d();
        auto [lo, hi] = spectral_bounds(g);
        if (!(lo <= tau + 1e-9 && tau <= hi + 1e-9)) {
            ok = false;
            why += entry.name + "; ";
        }
    }
    if (graphs < 40) {
        ok = false;
        why += "only " + std::to_string(graphs) + " graphs";
    }
    report(4, "spectral sandwich on " + std::to_string(graphs) + " graphs", ok, why);
}

void criterion_flow_equals_cut() {
    bool ok = true;
    std::string why;
    int done = 0;
    for (unsigned seed = 1; done < 50; ++seed) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> ndist(2, 12);
        int n = ndist(rng);
        std::uniform_int_distribution<int> wdist(1, 3);
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v) {
            std::uniform_int_distribution<int> pick(0, v - 1);
            edges.emplace_back(pick(rng), v, Rational(wdist(rng)));
        }
        std::uniform_int_distribution<int> extra(0, n);
        int extras = extra(rng);
        std::uniform_int_distribution<int> vdist(0, n - 1);
        for (int i = 0; i < extras; ++i) {
            int u = vdist(rng);
            int v = vdist(rng);
            if (u == v) continue;
            int lo = std::min(u, v), hi = std::max(u, v);
            bool dup = false;
            for (const Edge& e : edges) dup = dup || (e.u == lo && e.v == hi);
            if (!dup) edges.emplace_back(lo, hi, Rational(wdist(rng)));
        }
        Graph g(n, std::move(edges));
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        std::shuffle(ids.begin(), ids.end(), rng);
        std::uniform_int_distribution<int> szdist(1, std::max(1, n / 2));
        int sz = szdist(rng);
        VertexSet f(n), k(n);
        for (int i = 0; i < sz; ++i) f.insert(ids[i]);
        for (int i = 0; i < sz; ++i) k.insert(ids[sz + i]);
        FlowNetwork net = build_flow_network(g, f, k);
        FlowResult fr = max_flow(net);
        if (fr.value != min_cut_bruteforce(net)) {
            ok = false;
            why += "seed " + std::to_string(seed) + "; ";
        }
        ++done;
    }
    report(5, "max flow equals brute-force min cut on 50 networks", ok, why);
}

struct TraceBatch {
    std::vector<const testmatrix::Entry*> entries;
    std::vector<VertexSet> fs;
    std::vector<VertexSet> ks;
    std::vector<ProtocolTrace> traces;
    std::vector<Rational> taus;
    std::vector<VerificationReport> reports;
};

TraceBatch run_matrix_protocols() {
    TraceBatch batch;
    static std::vector<testmatrix::Entry> matrix = testmatrix::build();
    std::mt19937 rng(987654321);
    for (const auto& entry : matrix) {
        if (!entry.integer_weights) continue;
        const Graph& g = entry.graph;
        int n = g.vertex_count();
        RainbowReport rb = rainbow_time_exact(g);

        std::vector<VertexSet> fsets{*rb.witness};
        std::uniform_int_distribution<int> szdist(1, n / 2);
        for (int i = 0; i < 20; ++i) {
            std::vector<int> ids(n);
            for (int v = 0; v < n; ++v) ids[v] = v;
            std::shuffle(ids.begin(), ids.end(), rng);
            VertexSet f(n);
            int sz = szdist(rng);
            for (int j = 0; j < sz; ++j) f.insert(ids[j]);
            fsets.push_back(f);
        }
        for (const VertexSet& f : fsets) {
            VertexSet k = default_k(g, f);
            ProtocolTrace trace = run_protocol(g, f, k);
            batch.entries.push_back(&entry);
            batch.fs.push_back(f);
            batch.ks.push_back(k);
            batch.taus.push_back(*rb.tau);
            batch.reports.push_back(verify_trace(g, f, k, trace, *rb.tau));
            batch.traces.push_back(std::move(trace));
        }
    }
    return batch;
}

void criterion_per_round_flow(const TraceBatch& batch) {
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; i < batch.reports.size(); ++i) {
        if (!batch.reports[i].per_round_flow_ok) {
            ok = false;
            why += batch.entries[i]->name + "; ";
        }
    }
    report(6, "per-round flow bound on " + std::to_string(batch.reports.size()) + " runs", ok,
           why);
}

void criterion_round_bound(const TraceBatch& batch) {
    bool ok = true;
    std::string why;
    int within = 0;
    for (std::size_t i = 0; i < batch.reports.size(); ++i) {
        if (!batch.reports[i].round_bound_ok) {
            ok = false;
            why += batch.entries[i]->name + "; ";
        }
        if (batch.reports[i].within_tau_ceil) ++within;
    }
    std::ostringstream detail;
    detail << why << "fraction within ceil(tau): "
           << static_cast<double>(within) / static_cast<double>(batch.reports.size());
    report(7, "round bound holds on every trace", ok, detail.str());
}

void criterion_trace_validity(const TraceBatch& batch) {
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; i < batch.reports.size(); ++i) {
        bool good = batch.reports[i].perfect_matching_ok && batch.reports[i].capacity_ok;
        if (good) {
            // independent involution check on the replayed pairing
            const Graph& g = batch.entries[i]->graph;
            PairingState state = simulate_trace(g, batch.traces[i]);
            for (int v = 0; v < g.vertex_count(); ++v) {
                int p = state.partner[v];
                if (p != -1 && state.partner[p] != v) good = false;
            }
        }
        if (!good) {
            ok = false;
            why += batch.entries[i]->name + "; ";
        }
    }
    report(8, "every trace replays to a perfect involution", ok, why);
}

void criterion_capacity_relations(const TraceBatch& batch) {
    bool ok = true;
    std::string why;

    for (const auto& entry : testmatrix::build()) {
        const Graph& g = entry.graph;
        int n = g.vertex_count();
        if (n > 10) continue;
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
            VertexSet f = VertexSet::from_mask(n, mask);
            CapacityQuery qb{g, f, CapacityModel::bell, 1, 0.0};
            CapacityQuery qu{g, f, CapacityModel::unitary, 1, 0.0};
            if (capacity_unitary(qu) != 2 * capacity_bell(qb)) {
                ok = false;
                why += entry.name + " unitary; ";
                break;
            }
            long rounds = min_rounds_for_target(g, f, Rational(f.count()), CapacityModel::bell);
            if (BigInt(rounds) != ceil_rational(t_ratio(g, f))) {
                ok = false;
                why += entry.name + " min_rounds; ";
                break;
            }
        }
    }

    // crossing generations per round never exceed the one-round bell capacity
    for (std::size_t i = 0; i < batch.traces.size(); ++i) {
        if (!batch.reports[i].capacity_ok) {
            ok = false;
            why += batch.entries[i]->name + " crossing; ";
        }
    }
    report(9, "capacity relations (unitary, min-rounds, crossings)", ok, why);
}

std::string run_cli(const std::string& command, int& exit_code) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    exit_code = pclose(pipe);
    return out;
}

void criterion_determinism(const std::string& cli) {
    namespace fs = std::filesystem;
    bool ok = true;
    std::string why;

    fs::path dir = fs::temp_directory_path();
    fs::path k4 = dir / "acceptance_k4.json";
    fs::path p4 = dir / "acceptance_p4.json";
    save_graph(complete_graph(4), k4.string());
    save_graph(path_graph(4), p4.string());

    std::vector<std::string> commands = {
        "'" + cli + "' rainbow '" + k4.string() + "'",
        "'" + cli + "' protocol '" + p4.string() + "' --f 0,1 --verify",
    };
    for (const std::string& cmd : commands) {
        int rc1 = 0, rc2 = 0;
        std::string first = run_cli(cmd, rc1);
        std::string second = run_cli(cmd, rc2);
        if (rc1 != 0 || rc2 != 0) {
            ok = false;
            why += "nonzero exit; ";
        }
        if (first.empty() || first != second) {
            ok = false;
            why += "output mismatch; ";
        }
    }
    std::remove(k4.string().c_str());
    std::remove(p4.string().c_str());
    report(10, "CLI output is byte-identical across runs", ok, why);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-rbtk>\n";
        return 64;
    }
    try {
        criterion_exact_values();
        criterion_slopes();
        criterion_closed_forms();
        criterion_spectral();
        criterion_flow_equals_cut();
        TraceBatch batch = run_matrix_protocols();
        criterion_per_round_flow(batch);
        criterion_round_bound(batch);
        criterion_trace_validity(batch);
        criterion_capacity_relations(batch);
        criterion_determinism(argv[1]);
    } catch (const std::exception& e) {
        std::cout << "FAIL: unexpected exception: " << e.what() << "\n";
        return 99;
    }
    return failures;
}
