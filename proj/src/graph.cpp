#include "rainbow/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

int word_count(int universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe) {
    if (universe < 0) throw InvalidSpec("vertex set universe must be nonnegative");
    bits_.assign(word_count(universe), 0);
}

VertexSet VertexSet::from_vertices(int universe, const std::vector<int>& vs) {
    VertexSet s(universe);
    for (int v : vs) s.insert(v);
    return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
    if (universe > 64) throw TooLarge("mask construction limited to 64 vertices");
    VertexSet s(universe);
    if (universe < 64 && (mask >> universe) != 0)
        throw InvalidSpec("mask has bits outside the universe");
    if (!s.bits_.empty()) s.bits_[0] = mask;
    return s;
}

void VertexSet::check_vertex(int v) const {
    if (v < 0 || v >= universe_)
        throw InvalidSpec("vertex " + std::to_string(v) + " outside universe of size " +
                          std::to_string(universe_));
}

int VertexSet::count() const {
    int c = 0;
    for (std::uint64_t w : bits_) c += std::popcount(w);
    return c;
}

bool VertexSet::contains(int v) const {
    check_vertex(v);
    return (bits_[v >> 6] >> (v & 63)) & 1u;
}

void VertexSet::insert(int v) {
    check_vertex(v);
    bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
    check_vertex(v);
    bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

VertexSet VertexSet::complement() const {
    VertexSet s(universe_);
    for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = ~bits_[i];
    int tail = universe_ & 63;
    if (tail != 0 && !s.bits_.empty())
        s.bits_.back() &= (std::uint64_t{1} << tail) - 1;
    return s;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v = 0; v < universe_; ++v)
        if ((bits_[v >> 6] >> (v & 63)) & 1u) out.push_back(v);
    return out;
}

std::uint64_t VertexSet::mask64() const {
    if (universe_ > 64) throw TooLarge("mask64 limited to 64 vertices");
    return bits_.empty() ? 0 : bits_[0];
}

bool VertexSet::operator==(const VertexSet& other) const {
    return universe_ == other.universe_ && bits_ == other.bits_;
}

bool VertexSet::operator<(const VertexSet& other) const {
    if (universe_ != other.universe_)
        throw InvalidSpec("comparing vertex sets over different universes");
    for (std::size_t i = bits_.size(); i-- > 0;) {
        if (bits_[i] != other.bits_[i]) return bits_[i] < other.bits_[i];
    }
    return false;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 2) throw InvalidSpec("graph needs at least 2 vertices");
    for (Edge& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw InvalidEdge("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") out of range");
        if (e.u == e.v)
            throw InvalidEdge("self-loop at vertex " + std::to_string(e.u));
        if (!(e.w > 0))
            throw InvalidEdge("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") has nonpositive weight");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
            throw InvalidEdge("duplicate edge (" + std::to_string(edges_[i].u) + "," +
                              std::to_string(edges_[i].v) + ")");
    }

    adj_.assign(static_cast<std::size_t>(n_), {});
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        adj_[edges_[i].u].emplace_back(edges_[i].v, i);
        adj_[edges_[i].v].emplace_back(edges_[i].u, i);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

    // connectivity (BFS from 0)
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (auto [nb, ei] : adj_[queue[head]]) {
            if (!seen[nb]) {
                seen[nb] = 1;
                queue.push_back(nb);
            }
        }
    }
    if (static_cast<int>(queue.size()) != n_)
        throw DisconnectedGraph("graph is not connected");
}

int Graph::edge_index(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw InvalidSpec("vertex out of range");
    for (auto [nb, ei] : adj_[u])
        if (nb == v) return ei;
    return -1;
}

Rational Graph::weighted_degree(int v) const {
    if (v < 0 || v >= n_) throw InvalidSpec("vertex out of range");
    Rational d = 0;
    for (auto [nb, ei] : adj_[v]) d += edges_[ei].w;
    return d;
}

Rational boundary_weight(const Graph& g, const VertexSet& f) {
    if (f.universe() != g.vertex_count())
        throw InvalidSpec("vertex set universe does not match graph");
    int c = f.count();
    if (c == 0 || c == g.vertex_count())
        throw EmptyOrFullSet("boundary undefined for the empty or full vertex set");
    Rational total = 0;
    for (const Edge& e : g.edges())
        if (f.contains(e.u) != f.contains(e.v)) total += e.w;
    return total;
}

Rational t_ratio(const Graph& g, const VertexSet& f) {
    Rational b = boundary_weight(g, f);
    return Rational(f.count()) / b;
}

bool is_connected_induced(const Graph& g, const VertexSet& f) {
    if (f.universe() != g.vertex_count())
        throw InvalidSpec("vertex set universe does not match graph");
    std::vector<int> members = f.to_vector();
    if (members.empty()) throw EmptyOrFullSet("connectivity of the empty set is undefined");
    std::vector<int> queue{members[0]};
    VertexSet seen(f.universe());
    seen.insert(members[0]);
    int reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (auto [nb, ei] : g.neighbors(queue[head])) {
            if (f.contains(nb) && !seen.contains(nb)) {
                seen.insert(nb);
                ++reached;
                queue.push_back(nb);
            }
        }
    }
    return reached == static_cast<int>(members.size());
}

Matrix laplacian(const Graph& g) {
    int n = g.vertex_count();
    Matrix m(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (const Edge& e : g.edges()) {
        double w = e.w.get_d();
        m[e.u][e.v] -= w;
        m[e.v][e.u] -= w;
        m[e.u][e.u] += w;
        m[e.v][e.v] += w;
    }
    return m;
}

}  // namespace rainbow
