#include "rainbow/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/flow.hpp"
#include "rainbow/isoperimetric.hpp"

namespace rainbow {

VertexSet default_k(const Graph& g, const VertexSet& f) {
    if (f.universe() != g.vertex_count()) throw BadPartition("vertex set does not match graph");
    VertexSet k(g.vertex_count());
    int want = f.count();
    for (int v = 0; v < g.vertex_count() && want > 0; ++v) {
        if (!f.contains(v)) {
            k.insert(v);
            --want;
        }
    }
    return k;
}

ProtocolTrace run_protocol(const Graph& g, const VertexSet& f, const VertexSet& k) {
    if (f.count() == 0) throw BadPartition("protocol needs a nonempty F");
    ProtocolTrace trace;
    VertexSet fn = f;
    VertexSet kn = k;
    while (fn.count() > 0) {
        FlowNetwork net = build_flow_network(g, fn, kn);
        FlowResult fr = max_flow(net);
        if (fr.value <= 0)
            throw Error("no augmenting path although F is nonempty; graph invariants broken");
        Round round;
        round.f = fn.to_vector();
        round.k = kn.to_vector();
        round.value = fr.value;
        round.paths = decompose_paths(net, fr);
        round.edge_usage.assign(g.edges().size(), 0);
        for (const std::vector<int>& path : round.paths) {
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                int ei = g.edge_index(path[i], path[i + 1]);
                if (ei < 0) throw Error("decomposed path left the graph");
                round.edge_usage[ei] += 1;
            }
            fn.erase(path.front());
            kn.erase(path.back());
        }
        trace.rounds.push_back(std::move(round));
    }
    return trace;
}

PairingState simulate_trace(const Graph& g, const ProtocolTrace& trace) {
    int n = g.vertex_count();
    PairingState state;
    state.partner.assign(static_cast<std::size_t>(n), -1);

    std::vector<std::int64_t> budget(g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        if (!is_integer(e.w))
            throw NonIntegerWeights("trace replay needs integer edge weights");
        budget[i] = fits_int64(e.w.get_num()) ? to_int64(e.w.get_num()) : INT64_MAX;
    }

    std::vector<std::int64_t> used(g.edges().size());
    for (const Round& round : trace.rounds) {
        std::fill(used.begin(), used.end(), 0);
        for (const std::vector<int>& path : round.paths) {
            if (path.size() < 2) throw SwapError("path needs at least two vertices");
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                int ei = g.edge_index(path[i], path[i + 1]);
                if (ei < 0)
                    throw CapacityViolation("path uses nonexistent edge (" +
                                            std::to_string(path[i]) + "," +
                                            std::to_string(path[i + 1]) + ")");
                if (++used[ei] > budget[ei])
                    throw CapacityViolation("edge (" + std::to_string(path[i]) + "," +
                                            std::to_string(path[i + 1]) +
                                            ") used beyond its weight in one round");
            }
            // Bell pairs now sit on every path edge; swapping at each internal
            // node left to right stretches the first pair to the far end.
            int left = path.front();
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                state.swaps.push_back({path[i], left, path[i + 1]});
            int right = path.back();
            if (left == right) throw SwapError("path closes on itself");
            if (state.partner[left] != -1 || state.partner[right] != -1)
                throw SwapError("path endpoint already holds a finished pair");
            state.partner[left] = right;
            state.partner[right] = left;
        }
    }
    return state;
}

VerificationReport verify_trace(const Graph& g, const VertexSet& f, const VertexSet& k,
                                const ProtocolTrace& trace, const Rational& tau) {
    if (!(tau > 0)) throw InvalidSpec("tau must be positive");
    VerificationReport rep;
    rep.observed_rounds = static_cast<int>(trace.rounds.size());

    Rational inv_tau = Rational(1) / tau;
    Rational m = std::min(Rational(1), inv_tau);
    rep.per_round_flow_ok = true;
    for (const Round& round : trace.rounds) {
        Rational need = m * static_cast<long>(round.f.size());
        BigInt need_ceil = ceil_rational(need);
        if (BigInt(round.value) < need_ceil) {
            rep.per_round_flow_ok = false;
            break;
        }
    }

    int f_size = f.count();
    double raw_bound = tau.get_d() * std::log(static_cast<double>(f_size));
    rep.round_bound = std::max<long>(1, static_cast<long>(std::ceil(raw_bound)));
    rep.round_bound_ok = rep.observed_rounds <= rep.round_bound;

    rep.tau_ceil = rounds_required(tau);
    rep.within_tau_ceil = rep.observed_rounds <= rep.tau_ceil;

    try {
        PairingState state = simulate_trace(g, trace);
        bool ok = true;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int p = state.partner[v];
            if (f.contains(v))
                ok = ok && p != -1 && k.contains(p) && state.partner[p] == v;
            else if (k.contains(v))
                ok = ok && p != -1 && f.contains(p) && state.partner[p] == v;
            else
                ok = ok && p == -1;
        }
        rep.perfect_matching_ok = ok;

        Rational boundary = boundary_weight(g, f);
        rep.capacity_ok = true;
        for (const Round& round : trace.rounds) {
            long crossing = 0;
            for (const std::vector<int>& path : round.paths)
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    if (f.contains(path[i]) != f.contains(path[i + 1])) ++crossing;
            if (Rational(crossing) > boundary) {
                rep.capacity_ok = false;
                break;
            }
        }
    } catch (const Error&) {
        rep.perfect_matching_ok = false;
        rep.capacity_ok = false;
    }
    return rep;
}

}  // namespace rainbow
