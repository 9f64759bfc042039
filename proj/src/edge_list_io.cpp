#include "qsg/edge_list_io.hpp"

#include <fstream>
#include <sstream>

namespace qsg {

std::vector<VertexPair> parse_edge_list(std::istream& in) {
    std::vector<VertexPair> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first.front() == '#')
            continue;
        long a = 0, b = 0;
        std::istringstream retry(line);
        constexpr long kMaxLabel = 1000000;
        if (!(retry >> a >> b) || a <= 0 || b <= 0 || a > kMaxLabel || b > kMaxLabel)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected two positive integers, got '" + line + "'");
        std::string extra;
        if (retry >> extra && extra.front() != '#')
            throw ParseError("line " + std::to_string(line_no) + ": trailing content '" +
                             extra + "'");
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    return edges;
}

std::vector<VertexPair> read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return parse_edge_list(in);
}

Graph load_graph(const std::string& path) {
    return Graph::from_edge_list(read_edge_list_file(path));
}

}  // namespace qsg
