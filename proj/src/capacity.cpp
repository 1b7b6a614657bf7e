#include "rainbow/capacity.hpp"

#include <cmath>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

Rational checked_boundary(const Graph& g, const VertexSet& f) {
    try {
        return boundary_weight(g, f);
    } catch (const EmptyOrFullSet& e) {
        throw InvalidBipartition(e.what());
    } catch (const InvalidSpec& e) {
        throw InvalidBipartition(e.what());
    }
}

}  // namespace

Rational capacity_bell(const CapacityQuery& q) {
    if (q.model != CapacityModel::bell) throw InvalidSpec("query model is not bell");
    if (q.rounds < 0) throw InvalidSpec("rounds must be nonnegative");
    return q.rounds * checked_boundary(q.graph, q.f);
}

Rational capacity_unitary(const CapacityQuery& q) {
    if (q.model != CapacityModel::unitary) throw InvalidSpec("query model is not unitary");
    if (q.rounds < 0) throw InvalidSpec("rounds must be nonnegative");
    return 2 * q.rounds * checked_boundary(q.graph, q.f);
}

double capacity_hamiltonian(const CapacityQuery& q) {
    if (q.model != CapacityModel::hamiltonian)
        throw InvalidSpec("query model is not hamiltonian");
    if (q.time < 0) throw InvalidSpec("time must be nonnegative");
    return sie_rate_constant * checked_boundary(q.graph, q.f).get_d() * q.time;
}

long min_rounds_for_target(const Graph& g, const VertexSet& f, const Rational& target,
                           CapacityModel model) {
    if (target < 0) throw InvalidSpec("target must be nonnegative");
    if (target == 0) return 0;
    Rational boundary = checked_boundary(g, f);
    if (model == CapacityModel::hamiltonian) {
        double per_unit = sie_rate_constant * boundary.get_d();
        return static_cast<long>(std::ceil(target.get_d() / per_unit));
    }
    Rational per_round = model == CapacityModel::unitary ? 2 * boundary : boundary;
    BigInt c = ceil_rational(target / per_round);
    if (!fits_int64(c)) throw TooLarge("round count overflows");
    return static_cast<long>(to_int64(c));
}

CapacityModel parse_model(const std::string& name) {
    if (name == "bell") return CapacityModel::bell;
    if (name == "unitary") return CapacityModel::unitary;
    if (name == "hamiltonian") return CapacityModel::hamiltonian;
    throw InvalidSpec("unknown capacity model: " + name);
}

std::string model_name(CapacityModel m) {
    switch (m) {
        case CapacityModel::bell: return "bell";
        case CapacityModel::unitary: return "unitary";
        case CapacityModel::hamiltonian: return "hamiltonian";
    }
    return "?";
}

}  // namespace rainbow
