#ifndef QSG_QUANTUM_HPP
#define QSG_QUANTUM_HPP

#include <Eigen/Dense>
#include <vector>

#include "qsg/gauge.hpp"
#include "qsg/graph.hpp"
#include "qsg/pair_config.hpp"
#include "qsg/statistics.hpp"

namespace qsg {

/// Tight-binding Hamiltonian: Hermitian, with off-diagonal entries only
/// between adjacent vertices of the host graph.
struct Hamiltonian {
    Graph host;
    Eigen::MatrixXcd matrix;
};

// Discrete kinetic energy D - A (degree matrix minus adjacency); positive
// semidefinite, so the linear-chain levels come out as 4 sin^2(pi a / 2N).
Hamiltonian kinetic_hamiltonian(const Graph& g);

// Multiplies each transition amplitude by exp(i * phase); Hermiticity, the
// diagonal and all magnitudes are preserved.
Hamiltonian apply_gauge(const Hamiltonian& h, const GaugePotential& omega);

// Two-particle Hamiltonian on the pair graph built from a one-particle h:
// sigma = -1 gives noninteracting fermions, sigma = +1 hard-core bosons.
Hamiltonian two_particle_hamiltonian(const Hamiltonian& h, int sigma,
                                     const TwoParticleGraph& g2);

struct Spectrum {
    Eigen::VectorXd eigenvalues;    // ascending
    Eigen::MatrixXcd eigenvectors;  // orthonormal columns; empty unless requested
    double residual = 0.0;          // max_i ||H x_i - lambda_i x_i||_2
};

// Dense Hermitian diagonalization.  Eigenvector phases are fixed by making
// the largest-magnitude component real and positive.
Spectrum eigensolve(const Hamiltonian& h, bool want_vectors = false);

struct EquivalenceReport {
    double conjugation_error = 0.0;  // | U^dag Hbar U - H2^sigma |_max
    double fermi_gauge_error = 0.0;  // | gauge(H2+, fermi) - H2- |_max
};

// Cross-checks the labeled-particle construction against the pair-graph
// one: conjugating the distinguished two-particle Hamiltonian into the
// sigma-symmetric subspace must reproduce the pair Hamiltonian entrywise,
// and the Fermi gauge must map H2+ to H2-.  Throws EquivalenceViolation
// beyond 1e-12.
EquivalenceReport distinguished_equivalence_check(const Hamiltonian& h, int sigma);

// For each assignment: synthesize the gauge, apply it to the hard-core
// Bose Hamiltonian of the graph's kinetic energy, and diagonalize.
std::vector<Spectrum> spectral_flow(const Graph& g,
                                    const std::vector<PhaseAssignment>& assignments);

/// Flux-window experiment on the linear chain: a non-topological potential
/// threads flux 2*pi*p/t through every unit square whose edges lie inside
/// the windows [r, r+t] and [s, s+t], and the gauged Fermi spectrum
/// develops strongly localized analogues of Landau levels.
struct LandauResult {
    Eigen::VectorXd eigenvalues;
    Eigen::VectorXd ipr;          // inverse participation ratio per eigenvector
    Eigen::VectorXd window_mass;  // probability mass inside the flux-square nodes
    std::vector<int> window_nodes;
    std::vector<int> localized;   // ipr >= 3 * median and window mass >= 0.9
    double median_ipr = 0.0;
};

// Builds the potential in a discrete Landau gauge: steps advancing the
// higher particle coordinate inside its window carry a phase proportional
// to the lower coordinate's depth into the other window; all other steps
// carry zero.  Throws WindowOutOfRange.
LandauResult landau_experiment(int n, int r, int s, int t, int p);

// The gauge potential used by landau_experiment, exposed for flux checks.
GaugePotential landau_gauge(const TwoParticleGraph& g2, int r, int s, int t, int p);

}  // namespace qsg

#endif
