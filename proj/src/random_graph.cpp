#include "qsg/random_graph.hpp"

#include <vector>

namespace qsg {

Graph random_connected_graph(std::mt19937& rng, int min_vertices, int max_vertices,
                             double extra_edge_probability) {
    std::uniform_int_distribution<int> pick_v(min_vertices, max_vertices);
    const int v = pick_v(rng);
    std::vector<VertexPair> edges;
    // random spanning tree: attach each vertex to an earlier one
    for (Vertex j = 1; j < v; ++j) {
        std::uniform_int_distribution<int> pick_parent(0, j - 1);
        edges.emplace_back(pick_parent(rng), j);
    }
    std::bernoulli_distribution keep(extra_edge_probability);
    std::vector<std::vector<char>> used(v, std::vector<char>(v, 0));
    for (const auto& [a, b] : edges)
        used[a][b] = used[b][a] = 1;
    for (Vertex a = 0; a < v; ++a)
        for (Vertex b = a + 1; b < v; ++b)
            if (!used[a][b] && keep(rng))
                edges.emplace_back(a, b);
    return Graph(v, std::move(edges));
}

Cycle random_cycle(std::mt19937& rng, const Graph& g, int max_steps) {
    std::uniform_int_distribution<int> pick_v(0, g.vertex_count() - 1);
    std::uniform_int_distribution<int> pick_len(1, max_steps);
    const Vertex start = pick_v(rng);
    Cycle c{start};
    Vertex cur = start;
    const int steps = pick_len(rng);
    for (int i = 0; i < steps; ++i) {
        std::vector<Vertex> neighbors;
        for (Vertex w = 0; w < g.vertex_count(); ++w)
            if (g.adjacent(cur, w))
                neighbors.push_back(w);
        std::uniform_int_distribution<int> pick_n(0, static_cast<int>(neighbors.size()) - 1);
        cur = neighbors[pick_n(rng)];
        c.push_back(cur);
    }
    // close the walk along the tree
    SpanningTree t(g, start);
    Path back = t.tree_path(cur, start);
    c.insert(c.end(), back.begin() + 1, back.end());
    return c;
}

}  // namespace qsg
