#include "rainbow/isoperimetric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/jacobi.hpp"

namespace rainbow {

namespace {

bool mask_connected(const std::vector<std::uint64_t>& nbr, std::uint64_t mask) {
    if (mask == 0) return false;
    std::uint64_t reach = mask & (~mask + 1);
    for (;;) {
        std::uint64_t grow = reach;
        std::uint64_t m = reach;
        while (m != 0) {
            int v = std::countr_zero(m);
            m &= m - 1;
            grow |= nbr[v] & mask;
        }
        if (grow == reach) break;
        reach = grow;
    }
    return reach == mask;
}

struct EnumOutcome {
    Rational best;            // max t(F); negative sentinel until first hit
    std::uint64_t mask = 0;   // witness bits over full vertex ids
    bool found = false;
};

// Gray-code walk over the subsets of `parts` (ascending vertex ids).
// Candidates are subsets with 1 <= |F| <= size_cap; when prune is set, only
// sets inducing a connected subgraph whose complement (in the whole graph)
// is also connected are accepted, which cannot change the maximum.
EnumOutcome enumerate_best(const Graph& g, const std::vector<int>& parts, int size_cap,
                           bool prune) {
    int n = g.vertex_count();
    int m = static_cast<int>(parts.size());
    if (m >= 64) throw TooLarge("subset walk needs fewer than 64 enumerated vertices");
    std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        nbr[e.u] |= std::uint64_t{1} << e.v;
        nbr[e.v] |= std::uint64_t{1} << e.u;
    }
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    // int64 fast path: scale all weights to integers when the common
    // denominator is tame; exact rational loop otherwise.
    BigInt lcm = 1;
    for (const Edge& e : g.edges()) {
        BigInt den = e.w.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    bool int_path = fits_int64(lcm) && to_int64(lcm) <= (1 << 20);
    std::vector<std::int64_t> wint;
    if (int_path) {
        BigInt total = 0;
        for (const Edge& e : g.edges()) {
            BigInt scaled = e.w.get_num() * (lcm / e.w.get_den());
            total += scaled;
            if (!fits_int64(scaled)) {
                int_path = false;
                break;
            }
            wint.push_back(to_int64(scaled));
        }
        if (int_path && (!fits_int64(total) || to_int64(total) > (std::int64_t{1} << 61)))
            int_path = false;
    }

    struct Nb {
        int v;
        std::int64_t w;
    };
    std::vector<std::vector<Nb>> adj_i;
    std::vector<std::vector<std::pair<int, Rational>>> adj_q;
    if (int_path) {
        adj_i.assign(static_cast<std::size_t>(n), {});
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const Edge& e = g.edges()[i];
            adj_i[e.u].push_back({e.v, wint[i]});
            adj_i[e.v].push_back({e.u, wint[i]});
        }
    } else {
        adj_q.assign(static_cast<std::size_t>(n), {});
        for (const Edge& e : g.edges()) {
            adj_q[e.u].emplace_back(e.v, e.w);
            adj_q[e.v].emplace_back(e.u, e.w);
        }
    }

    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::uint64_t mask = 0;
    int pc = 0;
    EnumOutcome out;

    auto accept = [&](std::uint64_t cand) {
        return !prune || (mask_connected(nbr, cand) && mask_connected(nbr, full & ~cand));
    };

    if (int_path) {
        std::int64_t boundary = 0;
        std::int64_t best_pc = 0, best_b = 1;  // best ratio best_pc/best_b, 0 initially
        std::uint64_t steps = std::uint64_t{1} << m;
        for (std::uint64_t i = 1; i < steps; ++i) {
            int v = parts[std::countr_zero(i)];
            bool adding = !in[v];
            in[v] = static_cast<char>(adding);
            mask ^= std::uint64_t{1} << v;
            pc += adding ? 1 : -1;
            for (const Nb& nb : adj_i[v])
                boundary += (in[nb.v] == static_cast<char>(adding)) ? -nb.w : nb.w;
            if (pc < 1 || pc > size_cap) continue;
            auto lhs = static_cast<__int128>(pc) * best_b;
            auto rhs = static_cast<__int128>(best_pc) * boundary;
            if (lhs > rhs) {
                if (accept(mask)) {
                    best_pc = pc;
                    best_b = boundary;
                    out.mask = mask;
                    out.found = true;
                }
            } else if (lhs == rhs && out.found && mask < out.mask) {
                if (accept(mask)) out.mask = mask;
            }
        }
        if (out.found) {
            // undo the weight scaling: t = pc * lcm / boundary_scaled
            out.best = make_rational(BigInt(best_pc) * lcm, BigInt(best_b));
        }
        return out;
    }

    Rational boundary = 0;
    Rational best = -1;
    std::uint64_t steps = std::uint64_t{1} << m;
    for (std::uint64_t i = 1; i < steps; ++i) {
        int v = parts[std::countr_zero(i)];
        bool adding = !in[v];
        in[v] = static_cast<char>(adding);
        mask ^= std::uint64_t{1} << v;
        pc += adding ? 1 : -1;
        for (const auto& [u, w] : adj_q[v]) {
            if (in[u] == static_cast<char>(adding))
                boundary -= w;
            else
                boundary += w;
        }
        if (pc < 1 || pc > size_cap) continue;
        Rational cand = Rational(pc) / boundary;
        if (cand > best) {
            if (accept(mask)) {
                best = cand;
                out.mask = mask;
                out.found = true;
            }
        } else if (cand == best && out.found && mask < out.mask) {
            if (accept(mask)) out.mask = mask;
        }
    }
    if (out.found) out.best = best;
    return out;
}

void check_size(const Graph& g, const ExactOptions& opt) {
    int n = g.vertex_count();
    if (n > 64) throw TooLarge("exact enumeration is limited to 64 vertices");
    if (n > opt.max_n)
        throw TooLarge("graph exceeds the enumeration cap of " + std::to_string(opt.max_n) +
                       " vertices; raise max_n to force it");
}

// direct evaluation for the tiny graphs where the spectral lower bound
// degenerates; avoids recursing into the full report machinery
Rational tiny_exact_tau(const Graph& g) {
    int n = g.vertex_count();
    Rational best = -1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        int pc = std::popcount(mask);
        if (pc < 1 || pc > n / 2) continue;
        VertexSet f = VertexSet::from_mask(n, mask);
        Rational t = t_ratio(g, f);
        if (t > best) best = t;
    }
    return best;
}

}  // namespace

RainbowReport rainbow_time_exact(const Graph& g, const ExactOptions& opt) {
    check_size(g, opt);
    int n = g.vertex_count();
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) parts[v] = v;
    EnumOutcome res = enumerate_best(g, parts, n / 2, opt.prune_connected);
    if (!res.found) res = enumerate_best(g, parts, n / 2, false);

    RainbowReport report;
    report.method = "exact";
    report.tau = res.best;
    report.witness = VertexSet::from_mask(n, res.mask);
    report.rounds_required = rounds_required(res.best);
    auto [lo, hi] = spectral_bounds(g);
    report.spectral_lower = lo;
    report.spectral_upper = hi;
    return report;
}

RainbowReport unrestricted_rainbow_time(const Graph& g, int root, const ExactOptions& opt) {
    check_size(g, opt);
    int n = g.vertex_count();
    if (root < 0 || root >= n) throw InvalidSpec("root vertex out of range");
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(n) - 1);
    for (int v = 0; v < n; ++v)
        if (v != root) parts.push_back(v);
    EnumOutcome res = enumerate_best(g, parts, n, opt.prune_connected);
    if (!res.found) res = enumerate_best(g, parts, n, false);

    RainbowReport report;
    report.method = "exact";
    report.tau = res.best;
    report.witness = VertexSet::from_mask(n, res.mask);
    report.rounds_required = rounds_required(res.best);
    return report;
}

std::pair<double, double> spectral_bounds(const Graph& g) {
    double lam = lambda2(g);
    double dmax = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v)
        dmax = std::max(dmax, g.weighted_degree(v).get_d());
    double upper = 2.0 / lam;
    double disc = lam * (2.0 * dmax - lam);
    double lower;
    if (disc > 1e-12) {
        lower = 1.0 / std::sqrt(disc);
    } else if (g.vertex_count() <= 3) {
        lower = tiny_exact_tau(g).get_d();
    } else {
        lower = 0.0;  // theoretically unreachable for connected n > 3
    }
    return {lower, upper};
}

long rounds_required(const Rational& tau) {
    if (tau < 0) throw InvalidSpec("tau must be nonnegative");
    BigInt c = ceil_rational(tau);
    if (!fits_int64(c)) throw TooLarge("round count overflows");
    return std::max<long>(1, static_cast<long>(to_int64(c)));
}

}  // namespace rainbow
