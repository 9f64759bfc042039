#ifndef QSG_PAIR_CONFIG_HPP
#define QSG_PAIR_CONFIG_HPP

#include <vector>

#include "qsg/graph.hpp"

namespace qsg {

/// Configuration graph of two indistinguishable particles: nodes are
/// unordered pairs {j,l} of distinct base vertices, listed as (j,l), j < l,
/// in lexicographic order; two nodes are adjacent iff they share exactly
/// one base vertex and the differing vertices are adjacent in the base.
/// Every downstream matrix is indexed by this node order.
struct TwoParticleGraph {
    Graph base;
    Graph graph;  // the pair graph itself, nodes 0..v2-1
    std::vector<VertexPair> nodes;
    Eigen::MatrixXi node_index;  // symmetric lookup, -1 on the diagonal

    int node(Vertex j, Vertex l) const { return node_index(j, l); }
};

// Requires v >= 3 (TooFewVertices); throws DisconnectedConfigurationSpace
// if the pair graph falls apart.
TwoParticleGraph build_two_particle(const Graph& g);

/// 4-cycle on the pair graph in which the particles move back and forth in
/// alternating steps along two disjoint base edges.  These are exactly the
/// cycles that bound in the metric picture, so topological gauge
/// potentials must give them zero flux mod 2*pi.
struct ContractibleCycle {
    int edge_a, edge_b;  // disjoint base edge ids, edge_a < edge_b
    Cycle cycle;         // node sequence of length 5 (closed)
};

// One cycle per unordered pair of disjoint base edges, in lexicographic
// order of (edge_a, edge_b).
std::vector<ContractibleCycle> contractible_cycles(const TwoParticleGraph& g2);

enum class CycleKind { Direct, Exchange };

struct ProjectedCycle {
    Path first;   // trajectory of the particle starting at the lower vertex
    Path second;  // trajectory of the particle starting at the higher vertex
    CycleKind kind = CycleKind::Direct;
};

// Tracks the two particles individually along a closed cycle on the pair
// graph.  Direct if each particle returns to its own start, Exchange if
// they swap.  Throws NotACycle.
ProjectedCycle project_cycle(const TwoParticleGraph& g2, const Cycle& c2);

/// Two-particle configuration space with the particles labeled: nodes are
/// ordered pairs (j,l), j != l.  Not necessarily connected, so it is kept
/// as a raw adjacency matrix rather than a Graph.
struct DistinguishedGraph {
    int base_vertices = 0;
    std::vector<VertexPair> nodes;  // ordered pairs, lexicographic
    Eigen::MatrixXi adjacency;

    int node(Vertex j, Vertex l) const;
};

DistinguishedGraph build_distinguished(const Graph& g);

}  // namespace qsg

#endif
