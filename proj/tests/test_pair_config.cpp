#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "qsg/pair_config.hpp"
#include "qsg/random_graph.hpp"

using namespace qsg;
using test::circular_graph;
using test::complete_graph;
using test::lasso_graph;
using test::linear_graph;
using test::star_graph;

namespace {

// Enumeration oracle for the pair-graph adjacency: evaluate the four-delta
// formula on unordered pairs directly.
int adjacency_oracle(const Graph& g, VertexPair u, VertexPair w) {
    auto [j, l] = u;
    auto [k, m] = w;
    const Eigen::MatrixXi& a = g.adjacency();
    return (j == k) * a(l, m) + (j == m) * a(l, k) + a(j, k) * (l == m) + a(j, m) * (l == k);
}

int count_disjoint_edge_pairs(const Graph& g) {
    int count = 0;
    for (int ea = 0; ea < g.edge_count(); ++ea)
        for (int eb = ea + 1; eb < g.edge_count(); ++eb) {
            auto [a1, a2] = g.edges()[ea];
            auto [b1, b2] = g.edges()[eb];
            if (a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2)
                ++count;
        }
    return count;
}

}  // namespace

TEST_CASE("pair graph of the four-vertex chain") {
    TwoParticleGraph g2 = build_two_particle(linear_graph(4));
    CHECK(g2.graph.vertex_count() == 6);  // v(v-1)/2
    CHECK(g2.graph.edge_count() == 6);    // e(v-2)
    CHECK(g2.nodes.front() == VertexPair{0, 1});
    CHECK(g2.nodes.back() == VertexPair{2, 3});
    CHECK(g2.node(1, 0) == 0);
}

TEST_CASE("pair graph of the triangle is a triangle") {
    TwoParticleGraph g2 = build_two_particle(circular_graph(3));
    CHECK(g2.graph.vertex_count() == 3);
    CHECK(g2.graph.edge_count() == 3);
    CHECK(g2.nodes == std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("pair graph of K5") {
    TwoParticleGraph g2 = build_two_particle(complete_graph(5));
    CHECK(g2.graph.vertex_count() == 10);
    CHECK(g2.graph.edge_count() == 30);
}

TEST_CASE("too few vertices is rejected") {
    CHECK_THROWS_AS(build_two_particle(Graph::from_edge_list({{1, 2}})), TooFewVertices);
}

TEST_CASE("pair graph matches closed formulas and the adjacency oracle") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected_graph(rng, 3, 7);
        TwoParticleGraph g2 = build_two_particle(g);
        const int v = g.vertex_count();
        CHECK(g2.graph.vertex_count() == v * (v - 1) / 2);
        CHECK(g2.graph.edge_count() == g.edge_count() * (v - 2));
        for (int u = 0; u < g2.graph.vertex_count(); ++u)
            for (int w = 0; w < g2.graph.vertex_count(); ++w) {
                int expected = u == w ? 0 : adjacency_oracle(g, g2.nodes[u], g2.nodes[w]);
                CHECK(g2.graph.adjacency()(u, w) == expected);
            }
    }
}

TEST_CASE("contractible cycles") {
    CHECK(contractible_cycles(build_two_particle(star_graph(4))).empty());

    auto chain = contractible_cycles(build_two_particle(linear_graph(4)));
    REQUIRE(chain.size() == 1);
    CHECK(chain[0].edge_a == 0);  // edge (0,1)
    CHECK(chain[0].edge_b == 2);  // edge (2,3)
    CHECK(chain[0].cycle.size() == 5);
    CHECK(chain[0].cycle.front() == chain[0].cycle.back());

    CHECK(contractible_cycles(build_two_particle(complete_graph(5))).size() == 15);

    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_connected_graph(rng, 3, 7);
        TwoParticleGraph g2 = build_two_particle(g);
        auto squares = contractible_cycles(g2);
        // count formula: e(e-1)/2 - sum_j v_j(v_j-1)/2
        int sharing = 0;
        for (Vertex j = 0; j < g.vertex_count(); ++j)
            sharing += g.degree(j) * (g.degree(j) - 1) / 2;
        int expected = g.edge_count() * (g.edge_count() - 1) / 2 - sharing;
        CHECK(static_cast<int>(squares.size()) == expected);
        CHECK(static_cast<int>(squares.size()) == count_disjoint_edge_pairs(g));
        for (const auto& square : squares) {
            CHECK(is_cycle(g2.graph, square.cycle));
            ProjectedCycle projected = project_cycle(g2, square.cycle);
            CHECK(projected.kind == CycleKind::Direct);
            // each particle just retraces one edge
            CHECK(reduce_path(projected.first).size() == 1);
            CHECK(reduce_path(projected.second).size() == 1);
        }
    }
}

TEST_CASE("project_cycle classifies exchange and direct cycles") {
    TwoParticleGraph g2 = build_two_particle(circular_graph(3));
    // the single loop of the pair triangle: (0,1) -> (1,2) -> (0,2) -> (0,1)
    Cycle once{g2.node(0, 1), g2.node(1, 2), g2.node(0, 2), g2.node(0, 1)};
    ProjectedCycle single = project_cycle(g2, once);
    CHECK(single.kind == CycleKind::Exchange);

    Cycle twice = once;
    twice.insert(twice.end(), once.begin() + 1, once.end());
    ProjectedCycle doubled = project_cycle(g2, twice);
    CHECK(doubled.kind == CycleKind::Direct);

    CHECK_THROWS_AS(project_cycle(g2, {0, 1}), NotACycle);
}

TEST_CASE("exchange projections swap endpoints") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_connected_graph(rng, 3, 6);
        TwoParticleGraph g2 = build_two_particle(g);
        Cycle c = random_cycle(rng, g2.graph);
        ProjectedCycle projected = project_cycle(g2, c);
        auto [j0, l0] = g2.nodes[c.front()];
        if (projected.kind == CycleKind::Direct) {
            CHECK(projected.first.back() == j0);
            CHECK(projected.second.back() == l0);
        } else {
            CHECK(projected.first.back() == l0);
            CHECK(projected.second.back() == j0);
        }
    }
}

TEST_CASE("distinguished graph") {
    // one edge: both moves blocked by exclusion
    DistinguishedGraph tiny = build_distinguished(Graph::from_edge_list({{1, 2}}));
    CHECK(tiny.nodes.size() == 2);
    CHECK(tiny.adjacency.sum() == 0);

    DistinguishedGraph triangle = build_distinguished(circular_graph(3));
    CHECK(triangle.nodes.size() == 6);
    CHECK(triangle.adjacency.sum() == 12);  // 6 undirected edges

    // exchange is an automorphism
    DistinguishedGraph k5 = build_distinguished(complete_graph(5));
    for (std::size_t u = 0; u < k5.nodes.size(); ++u)
        for (std::size_t w = 0; w < k5.nodes.size(); ++w) {
            auto [j, l] = k5.nodes[u];
            auto [k, m] = k5.nodes[w];
            CHECK(k5.adjacency(u, w) == k5.adjacency(k5.node(l, j), k5.node(m, k)));
        }

    // nodes modulo exchange are in bijection with the pair-graph nodes
    TwoParticleGraph g2 = build_two_particle(complete_graph(5));
    std::set<std::pair<int, int>> quotient;
    for (auto [j, l] : k5.nodes)
        quotient.insert({std::min(j, l), std::max(j, l)});
    CHECK(quotient.size() == g2.nodes.size());
}
