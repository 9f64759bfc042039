#ifndef QSG_RANDOM_GRAPH_HPP
#define QSG_RANDOM_GRAPH_HPP

#include <random>

#include "qsg/graph.hpp"

namespace qsg {

// Random connected simple graph: a random spanning tree plus a random
// subset of the remaining vertex pairs.  Used by the verification command
// and the randomized tests.
Graph random_connected_graph(std::mt19937& rng, int min_vertices, int max_vertices,
                             double extra_edge_probability = 0.4);

// Random cycle on g: a self-avoiding-ish random walk from a random start,
// closed through v via a second walk; retries until a closed walk exists.
Cycle random_cycle(std::mt19937& rng, const Graph& g, int max_steps = 24);

}  // namespace qsg

#endif
