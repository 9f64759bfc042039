#ifndef QSG_STATISTICS_HPP
#define QSG_STATISTICS_HPP

#include <vector>

#include "qsg/gauge.hpp"
#include "qsg/graph.hpp"
#include "qsg/int_matrix.hpp"
#include "qsg/pair_config.hpp"

namespace qsg {

/// The linear system behind the statistics classification: row a of
/// `constraints` is the decomposition of the a-th contractible 4-cycle in
/// the fundamental-cycle basis of the pair graph, so a potential that
/// vanishes on the tree is topological iff constraints * omega lies in
/// (2*pi*Z)^g2.
struct ConstraintSystem {
    TwoParticleGraph g2;
    SpanningTree tree2;  // deterministic BFS tree of the pair graph, root 0
    std::vector<ContractibleCycle> contractibles;
    IntMatrix constraints;  // g2_count x f2
};

ConstraintSystem constraint_matrix(const TwoParticleGraph& g2);

/// Counts and generators of the statistics phases.  free_count continuous
/// phases in [0, 2*pi) plus one discrete phase 2*pi*m/d per divisor d > 1.
/// When the Aharonov-Bohm split has been performed, ab_count of the free
/// phases are attributable to single-particle fluxes and two_body_count
/// are genuine interaction phases.
struct PhaseClassification {
    int f2 = 0;              // fundamental cycles of the pair graph
    int g2_count = 0;        // contractible 4-cycles
    int rank = 0;            // rank of the constraint matrix
    int unit_divisors = 0;   // divisors equal to one
    std::vector<BigInt> discrete_divisors;  // divisors greater than one
    int free_count = 0;      // f2 - rank
    SnfResult snf;           // of the constraint matrix; q_inv drives synthesis

    bool ab_split = false;
    int ab_count = 0;
    int two_body_count = 0;
    int augmented_rank = 0;
};

PhaseClassification classify(const ConstraintSystem& cs);

// One cycle on the pair graph per fundamental cycle of the base graph: one
// particle traverses the cycle while the other is parked at a vertex the
// cycle misses.  If the BFS basis of some root leaves no parking vertex
// for one of its cycles, other roots are tried; a circular graph never
// admits anchors and throws NoAnchorVertex (callers special-case it).
std::vector<Cycle> ab_anchor_cycles(const Graph& g, const TwoParticleGraph& g2);

// Classification with the constraint system augmented by zero-flux
// conditions on the anchored cycles, separating Aharonov-Bohm phases from
// two-body phases.  The discrete divisors of the augmented system must
// coincide with those of the plain system; a difference signals a broken
// anchor basis and throws InconsistentDiscretePhases.
PhaseClassification classify_with_ab(const ConstraintSystem& cs,
                                     const std::vector<Cycle>& anchors);

// Full pipeline used by the CLI: plain classification plus the AB split,
// handling trees (no cycles) and circular graphs (every free phase is
// generated by a flux through the ring) without anchor augmentation.
PhaseClassification classify_statistics(const Graph& g, const ConstraintSystem& cs);

/// Values for every statistics phase: free_phases[l] in [0, 2*pi) and one
/// selection m_k in {0, ..., d_k - 1} per discrete divisor.
struct PhaseAssignment {
    Eigen::VectorXd free_phases;
    std::vector<long> discrete_selections;
};

// Gauge potential on the pair graph realizing the assignment: zero on the
// tree edges, with non-tree-edge fluxes q_inv * Phi where Phi packs zeros,
// the discrete phases 2*pi*m/d and the free phases, in divisor order.
GaugePotential synthesize_gauge(const ConstraintSystem& cs, const PhaseClassification& cls,
                                const PhaseAssignment& assignment);

// True iff the flux through every contractible 4-cycle is within tol of a
// multiple of 2*pi.
bool is_topological(const GaugePotential& omega2, const ConstraintSystem& cs,
                    double tol = kPhaseTol);

}  // namespace qsg

#endif
