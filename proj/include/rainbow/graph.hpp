#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rainbow/rational.hpp"

namespace rainbow {

/// One undirected weighted edge, canonical form u < v.
struct Edge {
    int u = 0;
    int v = 0;
    Rational w;

    Edge() = default;
    Edge(int u_, int v_, Rational w_) : u(u_), v(v_), w(std::move(w_)) {}

    bool operator==(const Edge& o) const { return u == o.u && v == o.v && w == o.w; }
};

/// Subset of the vertex ids {0..n-1}, stored as a bit vector.
///
/// Sets are ordered by their bit-vector value (vertex 0 is the lowest bit),
/// which is the tie-break used for witness sets.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    static VertexSet from_vertices(int universe, const std::vector<int>& vs);
    /// universe must be <= 64.
    static VertexSet from_mask(int universe, std::uint64_t mask);

    int universe() const { return universe_; }
    int count() const;
    bool empty() const { return count() == 0; }
    bool contains(int v) const;
    void insert(int v);
    void erase(int v);

    VertexSet complement() const;
    std::vector<int> to_vector() const;  // ascending
    /// Requires universe <= 64.
    std::uint64_t mask64() const;

    bool operator==(const VertexSet& other) const;
    bool operator!=(const VertexSet& other) const { return !(*this == other); }
    /// Bit-vector value comparison; requires equal universes.
    bool operator<(const VertexSet& other) const;

private:
    int universe_ = 0;
    std::vector<std::uint64_t> bits_;
    void check_vertex(int v) const;
};

/// Weighted undirected connectivity graph. Construction validates that the
/// graph is connected, has at least two vertices, dense ids 0..n-1, strictly
/// positive weights, no self-loops and no duplicate edges. Edges are kept
/// sorted with u < v.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// (neighbor, edge index) pairs, ascending by neighbor id.
    const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_[v]; }

    /// Index into edges() of the edge joining u and v, or -1.
    int edge_index(int u, int v) const;

    Rational weighted_degree(int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

using Matrix = std::vector<std::vector<double>>;

/// Total weight of edges crossing (f, complement). Throws EmptyOrFullSet
/// unless {} != f != V.
Rational boundary_weight(const Graph& g, const VertexSet& f);

/// t(F) = |F| / |boundary(F)|, exact.
Rational t_ratio(const Graph& g, const VertexSet& f);

/// True iff the subgraph induced on f is connected. f must be nonempty.
bool is_connected_induced(const Graph& g, const VertexSet& f);

/// Graph Laplacian L = D - W as a dense symmetric matrix of doubles.
Matrix laplacian(const Graph& g);

}  // namespace rainbow
