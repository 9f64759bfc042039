#include "qsg/statistics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qsg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

ConstraintSystem constraint_matrix(const TwoParticleGraph& g2) {
    SpanningTree tree2(g2.graph, 0);
    std::vector<ContractibleCycle> squares = contractible_cycles(g2);

    const int f2 = tree2.cycle_count();
    IntMatrix r(static_cast<int>(squares.size()), f2);
    for (int a = 0; a < static_cast<int>(squares.size()); ++a) {
        Eigen::VectorXi row = cycle_decompose(squares[a].cycle, tree2);
        for (int phi = 0; phi < f2; ++phi)
            r(a, phi) = row[phi];
    }
    return ConstraintSystem{g2, std::move(tree2), std::move(squares), std::move(r)};
}

PhaseClassification classify(const ConstraintSystem& cs) {
    PhaseClassification cls;
    cls.f2 = cs.constraints.cols();
    cls.g2_count = cs.constraints.rows();
    cls.snf = snf(cs.constraints);
    cls.rank = cls.snf.rank;
    for (const BigInt& d : cls.snf.divisors) {
        if (d == 1)
            ++cls.unit_divisors;
        else
            cls.discrete_divisors.push_back(d);
    }
    cls.free_count = cls.f2 - cls.rank;
    return cls;
}

std::vector<Cycle> ab_anchor_cycles(const Graph& g, const TwoParticleGraph& g2) {
    const int v = g.vertex_count();
    const int f = g.edge_count() - v + 1;
    if (f == 0)
        return {};

    for (Vertex root = 0; root < v; ++root) {
        SpanningTree t(g, root);
        std::vector<Cycle> anchored;
        bool ok = true;
        for (int phi = 0; phi < f && ok; ++phi) {
            Cycle c = fundamental_cycle(t, phi);
            std::vector<char> on_cycle(v, 0);
            for (Vertex x : c)
                on_cycle[x] = 1;
            Vertex park = -1;
            for (Vertex k = 0; k < v; ++k)
                if (!on_cycle[k]) {
                    park = k;
                    break;
                }
            if (park < 0) {
                ok = false;
                break;
            }
            Cycle lifted;
            lifted.reserve(c.size());
            for (Vertex x : c)
                lifted.push_back(g2.node(x, park));
            anchored.push_back(std::move(lifted));
        }
        if (ok)
            return anchored;
    }
    throw NoAnchorVertex("every cycle basis covers all vertices; no anchored cycles exist");
}

PhaseClassification classify_with_ab(const ConstraintSystem& cs,
                                     const std::vector<Cycle>& anchors) {
    PhaseClassification cls = classify(cs);
    const int f = static_cast<int>(anchors.size());
    const int f2 = cls.f2;

    IntMatrix augmented(f + cls.g2_count, f2);
    for (int i = 0; i < f; ++i) {
        Eigen::VectorXi row = cycle_decompose(anchors[i], cs.tree2);
        for (int phi = 0; phi < f2; ++phi)
            augmented(i, phi) = row[phi];
    }
    for (int a = 0; a < cls.g2_count; ++a)
        for (int phi = 0; phi < f2; ++phi)
            augmented(f + a, phi) = cs.constraints(a, phi);

    SnfResult star = snf(augmented);
    std::vector<BigInt> star_discrete;
    for (const BigInt& d : star.divisors)
        if (d != 1)
            star_discrete.push_back(d);
    if (star_discrete != cls.discrete_divisors)
        throw InconsistentDiscretePhases(
            "discrete divisors changed under the Aharonov-Bohm augmentation");

    cls.ab_split = true;
    cls.ab_count = f;
    cls.augmented_rank = star.rank;
    cls.two_body_count = f2 - star.rank;
    return cls;
}

PhaseClassification classify_statistics(const Graph& g, const ConstraintSystem& cs) {
    if (is_circular(g)) {
        // A flux through the ring generates every topological gauge
        // potential; no anchored cycle exists on a circle.
        PhaseClassification cls = classify(cs);
        const int f = g.edge_count() - g.vertex_count() + 1;
        cls.ab_split = true;
        cls.ab_count = f;
        cls.two_body_count = cls.free_count - f;
        cls.augmented_rank = cls.rank;
        return cls;
    }
    return classify_with_ab(cs, ab_anchor_cycles(g, cs.g2));
}

GaugePotential synthesize_gauge(const ConstraintSystem& cs, const PhaseClassification& cls,
                                const PhaseAssignment& assignment) {
    const int q = static_cast<int>(cls.discrete_divisors.size());
    const int s = cls.free_count;
    if (assignment.free_phases.size() != s)
        throw DimensionMismatch("expected " + std::to_string(s) + " free phases, got " +
                                std::to_string(assignment.free_phases.size()));
    if (static_cast<int>(assignment.discrete_selections.size()) != q)
        throw DimensionMismatch("expected " + std::to_string(q) + " discrete selections, got " +
                                std::to_string(assignment.discrete_selections.size()));

    Eigen::VectorXd phi = Eigen::VectorXd::Zero(cls.f2);
    for (int k = 0; k < q; ++k) {
        long m = assignment.discrete_selections[k];
        double d = cls.discrete_divisors[k].convert_to<double>();
        if (m < 0 || BigInt(m) >= cls.discrete_divisors[k])
            throw DimensionMismatch("discrete selection " + std::to_string(m) +
                                    " outside [0, divisor)");
        phi[cls.unit_divisors + k] = kTwoPi * static_cast<double>(m) / d;
    }
    for (int l = 0; l < s; ++l)
        phi[cls.rank + l] = assignment.free_phases[l];

    // omega = q_inv * phi
    Eigen::VectorXd omega = Eigen::VectorXd::Zero(cls.f2);
    for (int i = 0; i < cls.f2; ++i) {
        double acc = 0.0;
        for (int j = 0; j < cls.f2; ++j) {
            if (cls.snf.q_inv(i, j) == 0 || phi[j] == 0.0)
                continue;
            acc += cls.snf.q_inv(i, j).convert_to<double>() * phi[j];
        }
        omega[i] = acc;
    }
    return from_cycle_fluxes(cs.tree2, omega);
}

bool is_topological(const GaugePotential& omega2, const ConstraintSystem& cs, double tol) {
    if (!omega2.host().same_shape(cs.g2.graph))
        throw HostMismatch("is_topological: potential lives on a different pair graph");
    for (const ContractibleCycle& square : cs.contractibles)
        if (distance_to_two_pi_multiple(flux(omega2, square.cycle)) > tol)
            return false;
    return true;
}

}  // namespace qsg
