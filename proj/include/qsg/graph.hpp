#ifndef QSG_GRAPH_HPP
#define QSG_GRAPH_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "qsg/errors.hpp"

namespace qsg {

// Vertices are 0-based ints internally; edge-list files use positive labels
// (see edge_list_io), relabeled by order of first appearance.
using Vertex = int;

// A path is a vertex sequence with consecutive vertices adjacent.  A single
// vertex is a path of length zero.  A cycle is a path that is closed.
using Path = std::vector<Vertex>;
using Cycle = Path;

using VertexPair = std::pair<Vertex, Vertex>;

/// Simple undirected connected combinatorial graph with a canonical edge
/// ordering: each edge stored as (lo, hi), lo < hi, list sorted
/// lexicographically.  Immutable after construction.
class Graph {
public:
    // Labels must already be 0..v-1.  Throws EmptyGraph, SelfLoop,
    // DuplicateEdge, DisconnectedGraph, IndexOutOfRange.
    Graph(int vertex_count, std::vector<VertexPair> edges);

    // Builds a graph from arbitrary positive vertex labels, relabeling to
    // 0..v-1 in order of first appearance.
    static Graph from_edge_list(const std::vector<VertexPair>& edges);

    int vertex_count() const { return v_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexPair>& edges() const { return edges_; }
    const Eigen::MatrixXi& adjacency() const { return adjacency_; }

    bool adjacent(Vertex a, Vertex b) const { return adjacency_(a, b) != 0; }
    int degree(Vertex j) const { return adjacency_.row(j).sum(); }

    // Canonical index of the edge {a,b}, or -1 if absent.
    int edge_index(Vertex a, Vertex b) const { return edge_index_(a, b); }

    bool same_shape(const Graph& other) const {
        return v_ == other.v_ && edges_ == other.edges_;
    }

private:
    int v_ = 0;
    std::vector<VertexPair> edges_;
    Eigen::MatrixXi adjacency_;
    Eigen::MatrixXi edge_index_;
};

bool is_path(const Graph& g, const Path& p);
bool is_cycle(const Graph& g, const Path& p);

// True iff g is a single circle C_N (every vertex has degree 2).
bool is_circular(const Graph& g);

// Removes back-and-forth retracings (..., x, y, x, ... -> ..., x, ...)
// until none remain.  The result is the unique reduced word; endpoints are
// preserved and the operation is idempotent.
Path reduce_path(const Path& p);

Path inverse_path(const Path& p);
Path concatenate(const Path& p, const Path& q);

/// Deterministic BFS spanning tree: neighbors visited in ascending label
/// order, so the tree, the non-tree edge indexing and every derived cycle
/// basis are reproducible.  Holds a copy of its graph.
class SpanningTree {
public:
    SpanningTree(const Graph& g, Vertex root);

    const Graph& graph() const { return graph_; }
    Vertex root() const { return root_; }
    Vertex parent(Vertex j) const { return parent_[j]; }
    bool edge_in_tree(int edge_id) const { return in_tree_[edge_id] != 0; }

    // f = e - (v - 1), the number of independent cycles.
    int cycle_count() const { return static_cast<int>(non_tree_.size()); }

    // Canonical edge id of the phi-th non-tree edge, phi in [0, f).
    int non_tree_edge(int phi) const;

    // Reduced tree path from a to b.
    Path tree_path(Vertex a, Vertex b) const;

private:
    Graph graph_;
    Vertex root_;
    std::vector<Vertex> parent_;
    std::vector<char> in_tree_;
    std::vector<int> non_tree_;  // edge ids, ascending (lexicographic)
};

// Cycle formed by the tree path root -> lo(phi), the non-tree edge phi
// traversed positively (lo -> hi), and the tree path hi(phi) -> root,
// with retracings removed.
Cycle fundamental_cycle(const SpanningTree& t, int phi);

// Signed count of traversals of each non-tree edge by the cycle c; entry
// phi is (positive traversals) - (negative traversals), where positive
// means lo -> hi.  The flux of any gauge potential through c equals the
// decomposition dotted with the fundamental-cycle fluxes.
Eigen::VectorXi cycle_decompose(const Cycle& c, const SpanningTree& t);

}  // namespace qsg

#endif
