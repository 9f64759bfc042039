#include "qsg/homology.hpp"

namespace qsg {

ChainComplex build_complex(const TwoParticleGraph& g2,
                           const std::vector<ContractibleCycle>& squares) {
    const Graph& graph = g2.graph;
    const int v2 = graph.vertex_count();
    const int e2 = graph.edge_count();

    IntMatrix d1(v2, e2);
    for (int e = 0; e < e2; ++e) {
        auto [u, w] = graph.edges()[e];
        d1(u, e) = -1;
        d1(w, e) = 1;
    }

    IntMatrix d2(e2, static_cast<int>(squares.size()));
    for (int a = 0; a < static_cast<int>(squares.size()); ++a) {
        const Cycle& c = squares[a].cycle;
        for (std::size_t r = 0; r + 1 < c.size(); ++r) {
            int e = graph.edge_index(c[r], c[r + 1]);
            d2(e, a) += (c[r] < c[r + 1]) ? 1 : -1;
        }
    }
    return ChainComplex{std::move(d1), std::move(d2)};
}

HomologySummary h1(const ChainComplex& c) {
    if (c.d1.cols() != c.d2.rows())
        throw NotAComplex("boundary map dimensions do not chain");
    IntMatrix product = c.d1 * c.d2;
    for (int i = 0; i < product.rows(); ++i)
        for (int j = 0; j < product.cols(); ++j)
            if (product(i, j) != 0)
                throw NotAComplex("d1 * d2 != 0");

    HomologySummary out;
    const int cycles = c.d1.cols() - rank(c.d1);  // rank of ker d1
    SnfResult s = snf(c.d2);
    out.betti = cycles - s.rank;
    for (const BigInt& d : s.divisors)
        if (d != 1)
            out.torsion.push_back(d);
    return out;
}

}  // namespace qsg
