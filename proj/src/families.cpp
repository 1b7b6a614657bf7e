#include "rainbow/families.hpp"

#include <algorithm>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

int scalar_size(const FamilySpec& spec, const char* what) {
    if (spec.dims.size() != 1)
        throw InvalidSpec(std::string(what) + " takes a single size parameter");
    return spec.dims[0];
}

}  // namespace

Graph complete_graph(int n) {
    if (n < 2) throw InvalidSpec("complete graph needs n >= 2");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v, 1);
    return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
    if (n < 2) throw InvalidSpec("star graph needs n >= 2");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v, 1);
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    if (n < 2) throw InvalidSpec("path graph needs n >= 2");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v, 1);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidSpec("cycle graph needs n >= 3");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v, 1);
    edges.emplace_back(0, n - 1, 1);
    return Graph(n, std::move(edges));
}

Graph grid_graph(const std::vector<int>& dims) {
    if (dims.empty()) throw InvalidSpec("grid needs at least one dimension");
    long long n = 1;
    for (int d : dims) {
        if (d < 2) throw InvalidSpec("grid dimensions must each be >= 2");
        n *= d;
        if (n > 1'000'000) throw TooLarge("grid too large");
    }
    // row-major: last axis varies fastest
    std::size_t nd = dims.size();
    std::vector<long long> stride(nd, 1);
    for (std::size_t a = nd; a-- > 1;) stride[a - 1] = stride[a] * dims[a];

    std::vector<Edge> edges;
    std::vector<int> coord(nd, 0);
    for (long long id = 0; id < n; ++id) {
        for (std::size_t a = 0; a < nd; ++a) {
            if (coord[a] + 1 < dims[a])
                edges.emplace_back(static_cast<int>(id), static_cast<int>(id + stride[a]), 1);
        }
        for (std::size_t a = nd; a-- > 0;) {
            if (++coord[a] < dims[a]) break;
            coord[a] = 0;
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph scale_weights(const Graph& g, const Rational& c) {
    if (!(c > 0)) throw InvalidSpec("scale factor must be positive");
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) e.w = e.w * c;
    return Graph(g.vertex_count(), std::move(edges));
}

Graph hierarchical_product(const Graph& g, const Graph& h, const Rational& g_weight,
                           const Rational& h_weight) {
    if (!(g_weight > 0) || !(h_weight > 0))
        throw InvalidSpec("hierarchical product weights must be positive");
    int ng = g.vertex_count();
    int nh = h.vertex_count();
    long long n = static_cast<long long>(ng) * nh;
    if (n > 1'000'000) throw TooLarge("hierarchical product too large");

    std::vector<Edge> edges;
    edges.reserve(g.edges().size() + static_cast<std::size_t>(ng) * h.edges().size());
    for (int c = 0; c < ng; ++c) {
        int off = c * nh;
        for (const Edge& e : h.edges())
            edges.emplace_back(off + e.u, off + e.v, e.w * h_weight);
    }
    for (const Edge& e : g.edges())
        edges.emplace_back(e.u * nh, e.v * nh, e.w * g_weight);
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph hierarchy(const Graph& g, int k, const std::vector<Rational>& alpha) {
    if (k < 1) throw InvalidSpec("hierarchy needs at least one level");
    if (static_cast<int>(alpha.size()) != k)
        throw InvalidSpec("hierarchy needs one weight per level");
    for (const Rational& a : alpha)
        if (!(a > 0)) throw InvalidSpec("level weights must be positive");

    Graph result = alpha[0] == 1 ? g : scale_weights(g, alpha[0]);
    for (int level = 2; level <= k; ++level)
        result = hierarchical_product(g, result, alpha[level - 1], 1);
    return result;
}

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::complete:
            return complete_graph(scalar_size(spec, "complete"));
        case Family::star:
            return star_graph(scalar_size(spec, "star"));
        case Family::path:
            return path_graph(scalar_size(spec, "path"));
        case Family::cycle:
            return cycle_graph(scalar_size(spec, "cycle"));
        case Family::grid:
            return grid_graph(spec.dims);
        case Family::hierarchy:
            if (!spec.base) throw InvalidSpec("hierarchy spec needs a base graph");
            return hierarchy(*spec.base, spec.levels, spec.alpha);
    }
    throw InvalidSpec("unknown family");
}

GraphStats graph_stats(const Graph& g) {
    GraphStats st;
    st.total_edge_weight = 0;
    for (const Edge& e : g.edges()) st.total_edge_weight += e.w;
    st.max_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        Rational d = g.weighted_degree(v);
        if (d > st.max_degree) st.max_degree = d;
    }
    return st;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::star: return "star";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::grid: return "grid";
        case Family::hierarchy: return "hierarchy";
    }
    return "?";
}

}  // namespace rainbow
