#pragma once

#include <cstdint>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

struct Round {
    std::vector<int> f;  // active F at round start, ascending
    std::vector<int> k;  // active K at round start, ascending
    std::int64_t value = 0;
    std::vector<std::vector<int>> paths;       // F vertex ... K vertex
    std::vector<std::int64_t> edge_usage;      // per graph edge id
};

struct ProtocolTrace {
    std::vector<Round> rounds;
};

struct SwapEvent {
    int node = 0;   // internal vertex performing the swap
    int left = 0;   // resulting pair after the swap
    int right = 0;
};

struct PairingState {
    std::vector<int> partner;  // -1 = unpaired
    std::vector<SwapEvent> swaps;
};

struct VerificationReport {
    bool per_round_flow_ok = false;   // v_n >= ceil(min(1, 1/tau) * |F_n|)
    bool round_bound_ok = false;      // rounds <= max(1, ceil(tau * ln|F|))
    bool perfect_matching_ok = false; // replay pairs F and K perfectly
    bool capacity_ok = false;         // crossing generations <= |boundary(F)| per round
    int observed_rounds = 0;
    long round_bound = 0;
    long tau_ceil = 0;
    bool within_tau_ceil = false;     // observation, not part of the bound

    bool all_ok() const {
        return per_round_flow_ok && round_bound_ok && perfect_matching_ok && capacity_ok;
    }
};

/// The |f| lowest-id vertices outside f.
VertexSet default_k(const Graph& g, const VertexSet& f);

/// Repeat max-flow rounds, retiring every path's endpoints, until all of F
/// is paired. Preconditions as build_flow_network (nonempty f here).
ProtocolTrace run_protocol(const Graph& g, const VertexSet& f, const VertexSet& k);

/// Replay a trace: generate one Bell pair per path edge (respecting each
/// edge's per-round budget) and swap left-to-right at the internal nodes.
PairingState simulate_trace(const Graph& g, const ProtocolTrace& trace);

/// Check the trace against the flow, round-count, matching, and capacity
/// bounds implied by rainbow time tau.
VerificationReport verify_trace(const Graph& g, const VertexSet& f, const VertexSet& k,
                                const ProtocolTrace& trace, const Rational& tau);

}  // namespace rainbow
