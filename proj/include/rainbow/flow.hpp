#pragma once

#include <cstdint>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Directed arc with positive capacity, as seen by callers.
struct FlowArc {
    int tail = 0;
    int head = 0;
    std::int64_t cap = 0;
};

/// s/t-augmented directed network over a graph's vertices. Arcs are stored
/// in reverse pairs (arc i and i^1 undo each other); each graph edge (u,v,w)
/// becomes the pair u->v / v->u both with capacity w, and every active F/K
/// vertex hangs off the fictitious source/sink by a unit arc.
struct FlowNetwork {
    int graph_n = 0;
    int node_count = 0;  // graph_n + 2
    int s = 0;
    int t = 0;
    std::vector<int> tail;
    std::vector<int> head;
    std::vector<std::int64_t> cap;
    std::vector<int> edge_of;             // graph edge id, -1 for fictitious arcs
    std::vector<std::vector<int>> out;    // arc ids by tail, sorted by head id

    /// The positive-capacity arcs (reverse bookkeeping arcs hidden).
    std::vector<FlowArc> arcs() const;
};

struct FlowResult {
    std::int64_t value = 0;
    std::vector<std::int64_t> flow;  // net flow per arc; flow[i^1] == -flow[i]
};

/// Requires integer weights, |f| == |k| <= floor(n/2), f and k disjoint.
/// Empty f/k is allowed and yields a sourceless network.
FlowNetwork build_flow_network(const Graph& g, const VertexSet& f, const VertexSet& k);

/// Maximum integral s->t flow by shortest augmenting paths, ties broken
/// toward the lowest head id; fully deterministic.
FlowResult max_flow(const FlowNetwork& net);

/// Exhaustive minimum s/t cut, for cross-checking max_flow. Enumerates every
/// bipartition of the graph nodes, so it needs node_count <= 22.
std::int64_t min_cut_bruteforce(const FlowNetwork& net);

/// Splits a flow into exactly fr.value s->t paths (reported without s and t,
/// so each runs from an F vertex to a K vertex). Cycles are cancelled first.
std::vector<std::vector<int>> decompose_paths(const FlowNetwork& net, const FlowResult& fr);

/// Conservation defect at a node: net out-flow. Zero everywhere but s and t
/// for a legal flow.
std::int64_t net_outflow(const FlowNetwork& net, const FlowResult& fr, int node);

}  // namespace rainbow
