#include "rainbow/flow.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

std::vector<FlowArc> FlowNetwork::arcs() const {
    std::vector<FlowArc> v;
    for (std::size_t i = 0; i < cap.size(); ++i)
        if (cap[i] > 0) v.push_back({tail[i], head[i], cap[i]});
    return v;
}

namespace {

void add_pair(FlowNetwork& net, int from, int to, std::int64_t cap_fwd, std::int64_t cap_rev,
              int edge) {
    net.tail.push_back(from);
    net.head.push_back(to);
    net.cap.push_back(cap_fwd);
    net.edge_of.push_back(edge);
    net.tail.push_back(to);
    net.head.push_back(from);
    net.cap.push_back(cap_rev);
    net.edge_of.push_back(edge);
}

}  // namespace

FlowNetwork build_flow_network(const Graph& g, const VertexSet& f, const VertexSet& k) {
    int n = g.vertex_count();
    if (f.universe() != n || k.universe() != n)
        throw BadPartition("vertex sets do not match the graph");
    int fc = f.count();
    int kc = k.count();
    if (fc != kc) throw BadPartition("|F| and |K| differ");
    if (fc > n / 2) throw BadPartition("|F| exceeds half the vertices");
    for (int v : k.to_vector())
        if (f.contains(v)) throw BadPartition("F and K overlap at vertex " + std::to_string(v));

    FlowNetwork net;
    net.graph_n = n;
    net.node_count = n + 2;
    net.s = n;
    net.t = n + 1;

    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        if (!is_integer(e.w))
            throw NonIntegerWeights("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") has a fractional weight");
        BigInt w = e.w.get_num();
        if (!fits_int64(w)) throw TooLarge("edge weight too large for the flow solver");
        // undirected edge: full capacity both ways, each arc the other's reverse
        add_pair(net, e.u, e.v, to_int64(w), to_int64(w), static_cast<int>(i));
    }
    for (int v : f.to_vector()) add_pair(net, net.s, v, 1, 0, -1);
    for (int v : k.to_vector()) add_pair(net, v, net.t, 1, 0, -1);

    net.out.assign(static_cast<std::size_t>(net.node_count), {});
    for (std::size_t a = 0; a < net.cap.size(); ++a)
        net.out[net.tail[a]].push_back(static_cast<int>(a));
    for (auto& lst : net.out)
        std::sort(lst.begin(), lst.end(),
                  [&net](int a, int b) { return net.head[a] != net.head[b]
                                                    ? net.head[a] < net.head[b]
                                                    : a < b; });
    return net;
}

FlowResult max_flow(const FlowNetwork& net) {
    FlowResult fr;
    fr.flow.assign(net.cap.size(), 0);
    std::vector<int> prev_arc(static_cast<std::size_t>(net.node_count));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(net.node_count));

    for (;;) {
        std::fill(prev_arc.begin(), prev_arc.end(), -1);
        prev_arc[net.s] = -2;
        queue.clear();
        queue.push_back(net.s);
        for (std::size_t hd = 0; hd < queue.size() && prev_arc[net.t] == -1; ++hd) {
            int u = queue[hd];
            for (int a : net.out[u]) {
                int v = net.head[a];
                if (prev_arc[v] != -1 || net.cap[a] - fr.flow[a] <= 0) continue;
                prev_arc[v] = a;
                if (v == net.t) break;
                queue.push_back(v);
            }
        }
        if (prev_arc[net.t] == -1) break;

        std::int64_t push = -1;
        for (int v = net.t; v != net.s;) {
            int a = prev_arc[v];
            std::int64_t res = net.cap[a] - fr.flow[a];
            if (push < 0 || res < push) push = res;
            v = net.tail[a];
        }
        for (int v = net.t; v != net.s;) {
            int a = prev_arc[v];
            fr.flow[a] += push;
            fr.flow[a ^ 1] -= push;
            v = net.tail[a];
        }
        fr.value += push;
    }
    return fr;
}

std::int64_t min_cut_bruteforce(const FlowNetwork& net) {
    if (net.node_count > 22) throw TooLarge("cut enumeration limited to 22 nodes");
    int n = net.graph_n;
    std::int64_t best = -1;
    for (std::uint64_t side = 0; side < (std::uint64_t{1} << n); ++side) {
        auto in_s = [&](int v) {
            if (v == net.s) return true;
            if (v == net.t) return false;
            return ((side >> v) & 1u) != 0;
        };
        std::int64_t cut = 0;
        for (std::size_t a = 0; a < net.cap.size(); ++a)
            if (net.cap[a] > 0 && in_s(net.tail[a]) && !in_s(net.head[a])) cut += net.cap[a];
        if (best < 0 || cut < best) best = cut;
    }
    return best;
}

std::int64_t net_outflow(const FlowNetwork& net, const FlowResult& fr, int node) {
    std::int64_t sum = 0;
    for (std::size_t a = 0; a < net.cap.size(); ++a) {
        if (net.tail[a] == node) sum += fr.flow[a];
    }
    return sum;
}

std::vector<std::vector<int>> decompose_paths(const FlowNetwork& net, const FlowResult& fr) {
    std::vector<std::int64_t> pos(fr.flow.size());
    for (std::size_t a = 0; a < fr.flow.size(); ++a) pos[a] = std::max<std::int64_t>(0, fr.flow[a]);

    // cancel any cycles in the net flow so path peeling always terminates
    for (bool found = true; found;) {
        found = false;
        std::vector<char> state(static_cast<std::size_t>(net.node_count), 0);  // 0/1/2 white/gray/black
        std::vector<int> arc_stack;
        std::vector<std::pair<int, std::size_t>> stack;  // node, next position in out[]
        for (int start = 0; start < net.node_count && !found; ++start) {
            if (state[start] != 0) continue;
            stack.assign(1, {start, 0});
            arc_stack.clear();
            state[start] = 1;
            while (!stack.empty() && !found) {
                auto& [u, it] = stack.back();
                int next_arc = -1;
                while (it < net.out[u].size()) {
                    int a = net.out[u][it];
                    ++it;
                    if (pos[a] > 0 && state[net.head[a]] != 2) {
                        next_arc = a;
                        break;
                    }
                }
                if (next_arc == -1) {
                    state[u] = 2;
                    stack.pop_back();
                    if (!arc_stack.empty()) arc_stack.pop_back();
                    continue;
                }
                int v = net.head[next_arc];
                if (state[v] == 1) {
                    // back edge: arcs from v onward plus this one form a cycle
                    std::vector<int> cycle{next_arc};
                    for (std::size_t i = arc_stack.size(); i-- > 0;) {
                        cycle.push_back(arc_stack[i]);
                        if (net.tail[arc_stack[i]] == v) break;
                    }
                    std::int64_t slack = pos[cycle[0]];
                    for (int a : cycle) slack = std::min(slack, pos[a]);
                    for (int a : cycle) pos[a] -= slack;
                    found = true;
                    break;
                }
                state[v] = 1;
                arc_stack.push_back(next_arc);
                stack.push_back({v, 0});
            }
        }
    }

    std::vector<std::vector<int>> paths;
    std::vector<int> prev_arc(static_cast<std::size_t>(net.node_count));
    for (std::int64_t p = 0; p < fr.value; ++p) {
        std::fill(prev_arc.begin(), prev_arc.end(), -1);
        prev_arc[net.s] = -2;
        std::vector<int> queue{net.s};
        for (std::size_t hd = 0; hd < queue.size() && prev_arc[net.t] == -1; ++hd) {
            int u = queue[hd];
            for (int a : net.out[u]) {
                int v = net.head[a];
                if (prev_arc[v] != -1 || pos[a] <= 0) continue;
                prev_arc[v] = a;
                if (v == net.t) break;
                queue.push_back(v);
            }
        }
        if (prev_arc[net.t] == -1)
            throw Error("flow decomposition lost value; conservation is broken");
        std::vector<int> vertices;
        for (int v = net.t; v != net.s;) {
            int a = prev_arc[v];
            pos[a] -= 1;
            v = net.tail[a];
            if (v != net.s) vertices.push_back(v);
        }
        std::reverse(vertices.begin(), vertices.end());
        paths.push_back(std::move(vertices));
    }
    return paths;
}

}  // namespace rainbow
