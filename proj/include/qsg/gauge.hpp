#ifndef QSG_GAUGE_HPP
#define QSG_GAUGE_HPP

#include <Eigen/Dense>

#include "qsg/graph.hpp"
#include "qsg/pair_config.hpp"

namespace qsg {

// Congruence tests against 2*pi multiples use this tolerance; the phases
// produced by the synthesis pipeline are exact rationals times 2*pi, so it
// only needs to absorb float accumulation.
inline constexpr double kPhaseTol = 1e-9;

// Distance from x to the nearest integer multiple of 2*pi.
double distance_to_two_pi_multiple(double x);

/// Antisymmetric real phase assignment on the edges of a graph: the stored
/// value is the phase for traversing an edge from its lower to its higher
/// vertex; the reverse traversal picks up the opposite sign.
class GaugePotential {
public:
    GaugePotential(Graph host, Eigen::VectorXd edge_phases);

    static GaugePotential zero(const Graph& host);

    const Graph& host() const { return host_; }
    const Eigen::VectorXd& edge_phases() const { return phases_; }

    // Signed phase for the step from -> to; throws PathNotOnGraph if the
    // pair is not an edge.
    double phase(Vertex from, Vertex to) const;

private:
    Graph host_;
    Eigen::VectorXd phases_;
};

// Sum of signed edge phases along the path: additive under concatenation
// and invariant under inserting retracings.
double flux(const GaugePotential& omega, const Path& p);

// True iff the flux through every fundamental cycle of t is within tol of
// an integer multiple of 2*pi.  Equivalent to the potential being a pure
// gauge transformation.
bool is_trivial(const GaugePotential& omega, const SpanningTree& t, double tol = kPhaseTol);

// Potential that vanishes on the tree edges and carries fluxes[phi] on the
// phi-th non-tree edge; the flux through the phi-th fundamental cycle is
// then exactly fluxes[phi].
GaugePotential from_cycle_fluxes(const SpanningTree& t, const Eigen::VectorXd& fluxes);

// Lift of a base-graph potential to the pair graph: the step that moves
// one particle along a base edge (the other fixed) carries that edge's
// phase.  The result is always a topological gauge potential.
GaugePotential ab_lift(const GaugePotential& omega, const TwoParticleGraph& g2);

// Topological gauge potential with flux pi (mod 2*pi) through every
// exchange cycle and 0 through every direct cycle: an edge carries +/-pi
// exactly where the ordering of the two particles switches over.  Gauging
// the hard-core Bose Hamiltonian with it yields the Fermi spectrum.
GaugePotential fermi_gauge(const TwoParticleGraph& g2);

}  // namespace qsg

#endif
