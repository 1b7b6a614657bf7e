#include "rainbow/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/isoperimetric.hpp"

namespace rainbow {

namespace {

void check_alpha(int k, const std::vector<Rational>& alpha) {
    if (k < 1) throw InvalidSpec("hierarchy needs at least one level");
    if (static_cast<int>(alpha.size()) != k)
        throw InvalidSpec("hierarchy needs one weight per level");
    for (const Rational& a : alpha)
        if (!(a > 0)) throw InvalidSpec("level weights must be positive");
}

std::string option_name(int level, int k) {
    if (level == k) return "top";
    if (level == 1) return "bottom";
    return "level-" + std::to_string(level);
}

// Total weight, root degree, and max degree of the k-level hierarchy from
// the base graph's numbers alone. Level i adds copies of the base scaled by
// alpha_i between the previous levels' roots, so:
//   w_i = alpha_i * w_base + |base| * w_(i-1)
//   root_i = root_(i-1) + alpha_i * deg_base(0)
//   max_i = max(max_(i-1), root_(i-1) + alpha_i * max_base)
GraphStats stats_recurrence(const Rational& w_base, const Rational& root_deg_base,
                            const Rational& max_deg_base, int size, int k,
                            const std::vector<Rational>& alpha) {
    Rational w = alpha[0] * w_base;
    Rational root = alpha[0] * root_deg_base;
    Rational dmax = alpha[0] * max_deg_base;
    for (int i = 2; i <= k; ++i) {
        const Rational& a = alpha[static_cast<std::size_t>(i) - 1];
        Rational attached = root + a * max_deg_base;
        if (attached > dmax) dmax = attached;
        root += a * root_deg_base;
        w = a * w_base + size * w;
    }
    return {w, dmax};
}

std::vector<Rational> geometric_alphas(const Rational& alpha, int k) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(k));
    Rational cur = 1;
    for (int i = 0; i < k; ++i) {
        out.push_back(cur);
        cur *= alpha;
    }
    return out;
}

}  // namespace

Rational tau_complete(int n) {
    if (n < 2) throw InvalidSpec("complete graph needs n >= 2");
    // best F has floor(n/2) vertices: t = s/(s*(n-s)) = 1/(n - floor(n/2))
    return make_rational(1, (n + 1) / 2);
}

Rational u_complete(int n) {
    if (n < 2) throw InvalidSpec("complete graph needs n >= 2");
    return 1;  // all but the root: (n-1)/(n-1)
}

Rational hp_rainbow_time(const Rational& tau_h1, const Rational& u_h2, int size_h2) {
    if (size_h2 < 1) throw InvalidSpec("inner graph size must be positive");
    Rational top = size_h2 * tau_h1;
    return std::max(u_h2, top);
}

HierarchyEval hierarchy_rainbow_time(const Rational& tau_g, const Rational& u_g, int size_g,
                                     int k, const std::vector<Rational>& alpha) {
    if (size_g < 2) throw InvalidSpec("base graph size must be at least 2");
    check_alpha(k, alpha);

    HierarchyEval eval;
    eval.realized_n = pow_bigint(size_g, static_cast<unsigned long>(k));
    BigInt copies = 1;  // |G|^(i-1)
    int best_level = 0;
    for (int i = 1; i <= k; ++i) {
        const Rational& numerator_base = (i == k) ? tau_g : u_g;
        Rational value = Rational(copies) / alpha[static_cast<std::size_t>(i) - 1];
        value *= numerator_base;
        eval.per_level_candidates.push_back({i, value});
        if (best_level == 0 || value > eval.tau_closed_form) {
            eval.tau_closed_form = value;
            best_level = i;
        }
        copies *= size_g;
    }
    eval.dominating_option = option_name(best_level, k);
    return eval;
}

HierarchyEval kn_hierarchy_rainbow_time(int n, int k, const Rational& alpha) {
    if (n < 2) throw InvalidSpec("complete base needs n >= 2");
    if (n % 2 != 0)
        throw OddBaseUnsupported(
            "the 2/n top option assumes an even split; use hierarchy_rainbow_time with "
            "tau(K_n) = 1/ceil(n/2)");
    if (k < 2) throw InvalidSpec("the specialized form needs k >= 2");
    if (!(alpha > 0)) throw InvalidSpec("alpha must be positive");

    Rational ratio = Rational(n) / alpha;
    Rational bottom = 1;
    Rational mid = pow_rational(ratio, static_cast<unsigned long>(k - 2));
    Rational top = pow_rational(ratio, static_cast<unsigned long>(k - 1)) * make_rational(2, n);

    HierarchyEval eval;
    eval.per_level_candidates = {{1, bottom}, {k - 1, mid}, {k, top}};
    std::stable_sort(eval.per_level_candidates.begin(), eval.per_level_candidates.end(),
                     [](const LevelCandidate& a, const LevelCandidate& b) {
                         return a.level < b.level;
                     });
    int best_level = 0;
    for (const LevelCandidate& c : eval.per_level_candidates) {
        if (best_level == 0 || c.value > eval.tau_closed_form) {
            eval.tau_closed_form = c.value;
            best_level = c.level;
        }
    }
    eval.dominating_option = option_name(best_level, k);
    eval.realized_n = pow_bigint(n, static_cast<unsigned long>(k));
    eval.stats = stats_recurrence(make_rational(static_cast<long>(n) * (n - 1), 2), n - 1,
                                  n - 1, n, k, geometric_alphas(alpha, k));
    return eval;
}

GraphStats hierarchy_stats(const Graph& g, int k, const std::vector<Rational>& alpha) {
    check_alpha(k, alpha);
    GraphStats base = graph_stats(g);
    return stats_recurrence(base.total_edge_weight, g.weighted_degree(0), base.max_degree,
                            g.vertex_count(), k, alpha);
}

ComparisonReport compare_to_grid(int n, const Rational& alpha, int k, int d) {
    if (n < 2) throw InvalidSpec("base size must be at least 2");
    if (d < 1) throw InvalidSpec("grid dimension must be at least 1");
    if (k < 2) throw InvalidSpec("comparison needs k >= 2");
    if (!(alpha > 0)) throw InvalidSpec("alpha must be positive");

    ComparisonReport rep;
    rep.n = n;
    rep.alpha = alpha;
    rep.k = k;
    rep.d = d;

    // alpha >= n^((d-1)/d) as the exact integer comparison alpha^d >= n^(d-1);
    // this same inequality is the scaling comparison
    // max(0, 1 - log_n alpha) <= 1/d, so one exact test decides both.
    bool scaling_ok =
        pow_rational(alpha, static_cast<unsigned long>(d)) >=
        Rational(pow_bigint(n, static_cast<unsigned long>(d - 1)));
    bool below_n = alpha < n;
    rep.weight_condition_met = scaling_ok && below_n;
    rep.verdict = scaling_ok && rep.weight_condition_met;

    double log_ratio = std::log(alpha.get_d()) / std::log(static_cast<double>(n));
    rep.hierarchy_tau_scaling = std::max(0.0, 1.0 - log_ratio);
    rep.grid_tau_scaling = 1.0 / d;

    std::vector<Rational> alphas = geometric_alphas(alpha, k);
    HierarchyEval eval =
        hierarchy_rainbow_time(tau_complete(n), u_complete(n), n, k, alphas);
    rep.hierarchy_n = eval.realized_n;
    rep.hierarchy_tau = eval.tau_closed_form;
    rep.hierarchy_stats = stats_recurrence(make_rational(static_cast<long>(n) * (n - 1), 2),
                                           n - 1, n - 1, n, k, alphas);

    // nearest grid side: integer d-th root of N, rounded to the closer power
    BigInt target = rep.hierarchy_n;
    BigInt side;
    int exact = mpz_root(side.get_mpz_t(), target.get_mpz_t(), static_cast<unsigned long>(d));
    if (exact == 0) {
        BigInt low_pow = pow_bigint(side, static_cast<unsigned long>(d));
        BigInt up = side + 1;
        BigInt high_pow = pow_bigint(up, static_cast<unsigned long>(d));
        BigInt up_gap = high_pow - target;
        BigInt down_gap = target - low_pow;
        if (up_gap < down_gap) side = up;
    }
    if (side < 2) side = 2;
    rep.grid_side = side;
    rep.grid_n = pow_bigint(side, static_cast<unsigned long>(d));
    BigInt half_side = side / 2;
    rep.grid_tau_slab = Rational(half_side);
    BigInt per_axis = (side - 1) * pow_bigint(side, static_cast<unsigned long>(d - 1));
    rep.grid_stats.total_edge_weight = Rational(per_axis) * d;
    rep.grid_stats.max_degree = side >= 3 ? 2 * d : d;
    return rep;
}

HierarchyEval evaluate_hierarchy(const Graph& base, int k, const std::vector<Rational>& alpha) {
    check_alpha(k, alpha);
    RainbowReport tau_rep = rainbow_time_exact(base);
    RainbowReport u_rep = unrestricted_rainbow_time(base, 0);
    HierarchyEval eval =
        hierarchy_rainbow_time(*tau_rep.tau, *u_rep.tau, base.vertex_count(), k, alpha);
    eval.stats = hierarchy_stats(base, k, alpha);
    return eval;
}

}  // namespace rainbow
