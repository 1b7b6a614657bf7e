#pragma once

#include <optional>
#include <string>
#include <utility>

#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

// Result of a rainbow-time query. tau/witness/rounds_required are present
// for exact methods; the spectral fields are present whenever the Laplacian
// bounds were computed (always for method "exact" on tau-style queries,
// absent for the unrestricted variant which the bounds do not cover).
struct RainbowReport {
    std::optional<Rational> tau;
    std::optional<VertexSet> witness;
    std::optional<double> spectral_lower;
    std::optional<double> spectral_upper;
    std::optional<long> rounds_required;
    std::string method;  // "exact" or "spectral-only"
};

struct ExactOptions {
    bool prune_connected = true;
    int max_n = 24;  // enumeration guard, overridable; hard ceiling 64
};

// tau = max over nonempty F with |F| <= floor(n/2) of |F|/|boundary(F)|.
// Witness is the smallest maximizing bit-vector (among sets with connected
// induced subgraph and connected complement when pruning, which never
// changes the value). Includes spectral bounds.
RainbowReport rainbow_time_exact(const Graph& g, const ExactOptions& opt = {});

// Unrestricted variant: sup over all nonempty F avoiding root, no size cap.
RainbowReport unrestricted_rainbow_time(const Graph& g, int root, const ExactOptions& opt = {});

// (1/sqrt(lambda2*(2*d_max - lambda2)), 2/lambda2) bracketing tau.
// Degenerate 2*d_max <= lambda2 happens only for tiny graphs; then the
// lower bound falls back to the exact value.
std::pair<double, double> spectral_bounds(const Graph& g);

// ceil(tau), minimum 1.
long rounds_required(const Rational& tau);

}  // namespace rainbow
