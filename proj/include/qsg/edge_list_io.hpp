#ifndef QSG_EDGE_LIST_IO_HPP
#define QSG_EDGE_LIST_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qsg/graph.hpp"

namespace qsg {

// Edge-list text format: one edge per line as two whitespace-separated
// positive integers; blank lines and lines starting with '#' are ignored.
// Throws ParseError with a line number on malformed input.
std::vector<VertexPair> parse_edge_list(std::istream& in);

std::vector<VertexPair> read_edge_list_file(const std::string& path);

// Parses the file and builds the canonical graph (labels relabeled to
// 0..v-1 in order of first appearance).
Graph load_graph(const std::string& path);

}  // namespace qsg

#endif
