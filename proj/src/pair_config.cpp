#include "qsg/pair_config.hpp"

#include <string>

namespace qsg {

TwoParticleGraph build_two_particle(const Graph& g) {
    const int v = g.vertex_count();
    if (v < 3)
        throw TooFewVertices("two-particle graph needs at least 3 base vertices, got " +
                             std::to_string(v));

    std::vector<VertexPair> nodes;
    Eigen::MatrixXi index = Eigen::MatrixXi::Constant(v, v, -1);
    for (Vertex j = 0; j < v; ++j)
        for (Vertex l = j + 1; l < v; ++l) {
            index(j, l) = index(l, j) = static_cast<int>(nodes.size());
            nodes.emplace_back(j, l);
        }

    // one pair-graph edge per (spectator vertex, base edge) combination
    std::vector<VertexPair> edges;
    edges.reserve(std::size_t(g.edge_count()) * (v - 2));
    for (Vertex spectator = 0; spectator < v; ++spectator)
        for (const auto& [a, b] : g.edges()) {
            if (a == spectator || b == spectator)
                continue;
            edges.emplace_back(index(spectator, a), index(spectator, b));
        }

    try {
        Graph pair_graph(static_cast<int>(nodes.size()), std::move(edges));
        return TwoParticleGraph{g, std::move(pair_graph), std::move(nodes), std::move(index)};
    } catch (const DisconnectedGraph&) {
        throw DisconnectedConfigurationSpace("two-particle configuration space is disconnected");
    }
}

std::vector<ContractibleCycle> contractible_cycles(const TwoParticleGraph& g2) {
    const Graph& g = g2.base;
    std::vector<ContractibleCycle> out;
    for (int ea = 0; ea < g.edge_count(); ++ea)
        for (int eb = ea + 1; eb < g.edge_count(); ++eb) {
            auto [a1, a2] = g.edges()[ea];
            auto [b1, b2] = g.edges()[eb];
            if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2)
                continue;
            Cycle c{g2.node(a1, b1), g2.node(a2, b1), g2.node(a2, b2),
                    g2.node(a1, b2), g2.node(a1, b1)};
            out.push_back({ea, eb, std::move(c)});
        }
    return out;
}

ProjectedCycle project_cycle(const TwoParticleGraph& g2, const Cycle& c2) {
    if (!is_cycle(g2.graph, c2))
        throw NotACycle("project_cycle: not a closed path on the pair graph");

    auto [x, y] = g2.nodes[c2.front()];  // particle positions, first = lower start
    const Vertex start_first = x, start_second = y;
    ProjectedCycle out;
    out.first.push_back(x);
    out.second.push_back(y);

    for (std::size_t r = 0; r + 1 < c2.size(); ++r) {
        auto [a, b] = g2.nodes[c2[r + 1]];
        // adjacent pair nodes share exactly one base vertex
        const Vertex shared = (a == x || a == y) ? a : b;
        const Vertex target = (shared == a) ? b : a;
        if (x == shared) {
            y = target;
            out.second.push_back(y);
        } else {
            x = target;
            out.first.push_back(x);
        }
    }

    out.kind = (x == start_first && y == start_second) ? CycleKind::Direct
                                                       : CycleKind::Exchange;
    return out;
}

int DistinguishedGraph::node(Vertex j, Vertex l) const {
    // lexicographic over ordered pairs (j,l), l != j
    return j * (base_vertices - 1) + (l > j ? l - 1 : l);
}

DistinguishedGraph build_distinguished(const Graph& g) {
    const int v = g.vertex_count();
    DistinguishedGraph out;
    out.base_vertices = v;
    for (Vertex j = 0; j < v; ++j)
        for (Vertex l = 0; l < v; ++l)
            if (l != j)
                out.nodes.emplace_back(j, l);

    const int n = static_cast<int>(out.nodes.size());
    out.adjacency = Eigen::MatrixXi::Zero(n, n);
    const Eigen::MatrixXi& a = g.adjacency();
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            auto [j, l] = out.nodes[u];
            auto [k, m] = out.nodes[w];
            out.adjacency(u, w) = a(j, k) * (l == m) + a(l, m) * (j == k);
        }
    return out;
}

}  // namespace qsg
