#pragma once

#include <string>
#include <vector>

#include "rainbow/families.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

struct LevelCandidate {
    int level = 0;
    Rational value;
};

/// Closed-form rainbow time of a k-level hierarchy, with the per-level
/// candidate values and statistics of the realized graph (computed by
/// recurrence, so enormous hierarchies never get materialized).
struct HierarchyEval {
    Rational tau_closed_form;
    std::string dominating_option;  // "bottom", "top", or "level-i"
    std::vector<LevelCandidate> per_level_candidates;
    GraphStats stats;
    BigInt realized_n;
};

/// tau of H1 with every vertex expanded into a copy of H2:
/// max(u(H2), |H2| * tau(H1)).
Rational hp_rainbow_time(const Rational& tau_h1, const Rational& u_h2, int size_h2);

/// General k-level form: level i < k contributes |G|^(i-1)/alpha_i * u(G),
/// the top level |G|^(k-1)/alpha_k * tau(G). Ties go to the lowest level.
HierarchyEval hierarchy_rainbow_time(const Rational& tau_g, const Rational& u_g, int size_g,
                                     int k, const std::vector<Rational>& alpha);

/// Specialized complete-base geometric-weight form
/// max(1, (n/alpha)^(k-1) * 2/n, (n/alpha)^(k-2)); even n only, the 2/n term
/// assumes a perfectly balanced top cut. Odd n callers get
/// OddBaseUnsupported and should use hierarchy_rainbow_time with
/// tau(K_n) = 1/ceil(n/2).
HierarchyEval kn_hierarchy_rainbow_time(int n, int k, const Rational& alpha);

/// Statistics of hierarchy(g, k, alpha) without building the graph.
GraphStats hierarchy_stats(const Graph& g, int k, const std::vector<Rational>& alpha);

struct ComparisonReport {
    int n = 0;
    Rational alpha;
    int k = 0;
    int d = 0;
    double hierarchy_tau_scaling = 0.0;  // exponent of N: max(0, 1 - log_n alpha)
    double grid_tau_scaling = 0.0;       // 1/d
    bool weight_condition_met = false;   // alpha in [n^(1-1/d), n), checked exactly
    bool verdict = false;
    // concrete instance at N = n^k vs the nearest d-dimensional grid
    BigInt hierarchy_n;
    Rational hierarchy_tau;
    GraphStats hierarchy_stats;
    BigInt grid_side;  // nearest integer d-th root of n^k
    BigInt grid_n;
    Rational grid_tau_slab;  // floor(side/2), the axis-slab cut value
    GraphStats grid_stats;
};

/// Does the complete-base geometric hierarchy K_n**k beat a d-dimensional
/// grid on rainbow-time scaling while spending no more edge weight?
ComparisonReport compare_to_grid(int n, const Rational& alpha, int k, int d);

/// Convenience: exact tau and u of the base, then the closed form.
HierarchyEval evaluate_hierarchy(const Graph& base, int k, const std::vector<Rational>& alpha);

/// Closed forms for complete graphs: tau(K_n) = 1/ceil(n/2), u(K_n) = 1.
Rational tau_complete(int n);
Rational u_complete(int n);

}  // namespace rainbow
