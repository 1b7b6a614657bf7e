#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

enum class Family { complete, star, path, cycle, grid, hierarchy };

/// Declarative description of one generated graph. For the scalar families
/// dims holds {n}; for grid it holds the extent of each axis; hierarchy uses
/// base/levels/alpha (alpha has one weight per level, level 1 innermost).
struct FamilySpec {
    Family family = Family::complete;
    std::vector<int> dims;
    std::optional<Graph> base;
    int levels = 1;
    std::vector<Rational> alpha;
};

Graph generate(const FamilySpec& spec);

Graph complete_graph(int n);
Graph star_graph(int n);   // vertex 0 is the center
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph grid_graph(const std::vector<int>& dims);  // row-major ids, last axis fastest

/// Multiply every edge weight by c > 0.
Graph scale_weights(const Graph& g, const Rational& c);

/// G with every vertex replaced by a copy of H; copy c occupies ids
/// [c*|H|, (c+1)*|H|) and its edges carry h_weight times the H weight; the
/// copies' root vertices (offset 0) are joined by G's edges scaled by
/// g_weight.
Graph hierarchical_product(const Graph& g, const Graph& h, const Rational& g_weight,
                           const Rational& h_weight);

/// k-level hierarchy G ** k: level-i edges carry weight alpha[i-1], level 1
/// innermost; |G|^k vertices.
Graph hierarchy(const Graph& g, int k, const std::vector<Rational>& alpha);

struct GraphStats {
    Rational total_edge_weight;
    Rational max_degree;
};

GraphStats graph_stats(const Graph& g);

std::string family_name(Family f);

}  // namespace rainbow
