#include "qsg/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_map>

namespace qsg {

Graph::Graph(int vertex_count, std::vector<VertexPair> edges) : v_(vertex_count) {
    if (edges.empty())
        throw EmptyGraph("graph has no edges");
    for (auto& [a, b] : edges) {
        if (a == b)
            throw SelfLoop("self-loop at vertex " + std::to_string(a + 1));
        if (a < 0 || b < 0 || a >= v_ || b >= v_)
            throw IndexOutOfRange("vertex label out of range");
        if (a > b)
            std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw DuplicateEdge("duplicate edge (" + std::to_string(edges[i].first + 1) +
                                "," + std::to_string(edges[i].second + 1) + ")");
    edges_ = std::move(edges);

    adjacency_ = Eigen::MatrixXi::Zero(v_, v_);
    edge_index_ = Eigen::MatrixXi::Constant(v_, v_, -1);
    for (int e = 0; e < edge_count(); ++e) {
        auto [a, b] = edges_[e];
        adjacency_(a, b) = adjacency_(b, a) = 1;
        edge_index_(a, b) = edge_index_(b, a) = e;
    }

    // connectivity
    std::vector<char> seen(v_, 0);
    std::queue<Vertex> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop();
        for (Vertex w = 0; w < v_; ++w)
            if (adjacency_(u, w) && !seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push(w);
            }
    }
    if (reached != v_)
        throw DisconnectedGraph("graph is not connected");
}

Graph Graph::from_edge_list(const std::vector<VertexPair>& edges) {
    if (edges.empty())
        throw EmptyGraph("empty edge list");
    std::unordered_map<int, int> relabel;
    std::vector<VertexPair> canonical;
    canonical.reserve(edges.size());
    auto label_of = [&relabel](int raw) {
        if (raw <= 0)
            throw Error("vertex labels must be positive, got " + std::to_string(raw));
        auto [it, fresh] = relabel.try_emplace(raw, static_cast<int>(relabel.size()));
        (void)fresh;
        return it->second;
    };
    for (const auto& [a, b] : edges) {
        int first = label_of(a);  // sequenced: a's label is assigned before b's
        int second = label_of(b);
        canonical.emplace_back(first, second);
    }
    return Graph(static_cast<int>(relabel.size()), std::move(canonical));
}

bool is_path(const Graph& g, const Path& p) {
    if (p.empty())
        return false;
    for (Vertex x : p)
        if (x < 0 || x >= g.vertex_count())
            return false;
    for (std::size_t r = 0; r + 1 < p.size(); ++r)
        if (!g.adjacent(p[r], p[r + 1]))
            return false;
    return true;
}

bool is_cycle(const Graph& g, const Path& p) {
    return is_path(g, p) && p.front() == p.back();
}

bool is_circular(const Graph& g) {
    if (g.vertex_count() < 3)
        return false;
    for (Vertex j = 0; j < g.vertex_count(); ++j)
        if (g.degree(j) != 2)
            return false;
    return true;
}

Path reduce_path(const Path& p) {
    Path out;
    out.reserve(p.size());
    for (Vertex v : p) {
        if (out.size() >= 2 && out[out.size() - 2] == v)
            out.pop_back();
        else
            out.push_back(v);
    }
    return out;
}

Path inverse_path(const Path& p) {
    return Path(p.rbegin(), p.rend());
}

Path concatenate(const Path& p, const Path& q) {
    if (p.empty() || q.empty() || p.back() != q.front())
        throw Error("paths cannot be concatenated");
    Path out = p;
    out.insert(out.end(), q.begin() + 1, q.end());
    return out;
}

SpanningTree::SpanningTree(const Graph& g, Vertex root)
    : graph_(g), root_(root), parent_(g.vertex_count(), -1), in_tree_(g.edge_count(), 0) {
    if (root < 0 || root >= g.vertex_count())
        throw IndexOutOfRange("spanning tree root out of range");
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<Vertex> queue;
    queue.push(root);
    seen[root] = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop();
        for (Vertex w = 0; w < g.vertex_count(); ++w)
            if (g.adjacent(u, w) && !seen[w]) {
                seen[w] = 1;
                parent_[w] = u;
                in_tree_[g.edge_index(u, w)] = 1;
                queue.push(w);
            }
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (!in_tree_[e])
            non_tree_.push_back(e);
}

int SpanningTree::non_tree_edge(int phi) const {
    if (phi < 0 || phi >= cycle_count())
        throw IndexOutOfRange("non-tree edge index " + std::to_string(phi) +
                              " out of range [0," + std::to_string(cycle_count()) + ")");
    return non_tree_[phi];
}

Path SpanningTree::tree_path(Vertex a, Vertex b) const {
    auto to_root = [this](Vertex x) {
        Path chain{x};
        while (parent_[x] != -1) {
            x = parent_[x];
            chain.push_back(x);
        }
        return chain;
    };
    Path down = to_root(a);             // a ... root
    Path up = inverse_path(to_root(b)); // root ... b
    return reduce_path(concatenate(down, up));
}

Cycle fundamental_cycle(const SpanningTree& t, int phi) {
    auto [lo, hi] = t.graph().edges()[t.non_tree_edge(phi)];
    Path head = t.tree_path(t.root(), lo);
    head.push_back(hi);  // the non-tree edge, traversed lo -> hi
    return reduce_path(concatenate(head, t.tree_path(hi, t.root())));
}

Eigen::VectorXi cycle_decompose(const Cycle& c, const SpanningTree& t) {
    const Graph& g = t.graph();
    if (!is_cycle(g, c))
        throw NotACycle("cycle_decompose: not a closed path on the graph");
    Eigen::VectorXi counts = Eigen::VectorXi::Zero(t.cycle_count());
    std::vector<int> phi_of_edge(g.edge_count(), -1);
    for (int phi = 0; phi < t.cycle_count(); ++phi)
        phi_of_edge[t.non_tree_edge(phi)] = phi;
    for (std::size_t r = 0; r + 1 < c.size(); ++r) {
        int e = g.edge_index(c[r], c[r + 1]);
        int phi = phi_of_edge[e];
        if (phi >= 0)
            counts[phi] += (c[r] < c[r + 1]) ? 1 : -1;
    }
    return counts;
}

}  // namespace qsg
