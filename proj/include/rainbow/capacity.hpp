#pragma once

#include <numbers>
#include <string>

#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

enum class CapacityModel { bell, unitary, hamiltonian };

/// How much entanglement can cross the cut (f, complement)?  duration is a
/// round count for bell/unitary and a time for hamiltonian.
struct CapacityQuery {
    Graph graph;
    VertexSet f;
    CapacityModel model = CapacityModel::bell;
    long rounds = 0;
    double time = 0.0;
};

/// One Bell pair per crossing weight unit per round: rounds * |boundary|.
Rational capacity_bell(const CapacityQuery& q);

/// Pre-shared pairs double the throughput: rounds * 2 * |boundary|.
Rational capacity_unitary(const CapacityQuery& q);

/// Small-incremental-entangling rate bound: 36*ln(2) * |boundary| * time.
double capacity_hamiltonian(const CapacityQuery& q);

/// ceil(target / per-round capacity); 0 when the target is 0. Exact for
/// bell/unitary, floating for hamiltonian (result is then time units).
long min_rounds_for_target(const Graph& g, const VertexSet& f, const Rational& target,
                           CapacityModel model);

/// The SIE rate constant, natural-log convention (~24.953); the only place
/// the log base enters, so a base-2 reading would change just this line.
inline constexpr double sie_rate_constant = 36.0 * std::numbers::ln2;

CapacityModel parse_model(const std::string& name);
std::string model_name(CapacityModel m);

}  // namespace rainbow
