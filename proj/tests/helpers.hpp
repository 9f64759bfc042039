#ifndef QSG_TEST_HELPERS_HPP
#define QSG_TEST_HELPERS_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qsg/graph.hpp"

namespace qsg::test {

inline std::string corpus(const std::string& stem) {
    return std::string(QSG_CORPUS_DIR) + "/" + stem + ".edges";
}

inline Graph linear_graph(int n) {
    std::vector<VertexPair> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

inline Graph circular_graph(int n) {
    std::vector<VertexPair> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

inline Graph star_graph(int arms) {
    std::vector<VertexPair> edges;
    for (int i = 1; i <= arms; ++i)
        edges.emplace_back(0, i);
    return Graph(arms + 1, std::move(edges));
}

inline Graph complete_graph(int n) {
    std::vector<VertexPair> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

// edges (1,2),(2,3),(1,3),(3,4): three-vertex loop plus a lead
inline Graph lasso_graph() {
    return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
}

// one-particle chain levels 4 sin^2(pi a / 2N), ascending in a
inline std::vector<double> chain_levels(int n) {
    std::vector<double> levels;
    for (int a = 0; a < n; ++a) {
        double s = std::sin(std::numbers::pi * a / (2.0 * n));
        levels.push_back(4.0 * s * s);
    }
    return levels;
}

// sums of distinct one-particle levels, sorted
inline std::vector<double> distinct_pair_sums(const std::vector<double>& levels) {
    std::vector<double> sums;
    for (std::size_t a = 0; a < levels.size(); ++a)
        for (std::size_t b = a + 1; b < levels.size(); ++b)
            sums.push_back(levels[a] + levels[b]);
    std::sort(sums.begin(), sums.end());
    return sums;
}

inline double max_spectrum_gap(const Eigen::VectorXd& got, const std::vector<double>& want) {
    if (static_cast<std::size_t>(got.size()) != want.size())
        return 1e300;
    double gap = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i)
        gap = std::max(gap, std::abs(got[static_cast<int>(i)] - want[i]));
    return gap;
}

inline double max_spectrum_gap(const Eigen::VectorXd& got, const Eigen::VectorXd& want) {
    if (got.size() != want.size())
        return 1e300;
    return (got - want).cwiseAbs().maxCoeff();
}

}  // namespace qsg::test

#endif
