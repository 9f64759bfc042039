#ifndef QSG_HOMOLOGY_HPP
#define QSG_HOMOLOGY_HPP

#include <vector>

#include "qsg/int_matrix.hpp"
#include "qsg/pair_config.hpp"

namespace qsg {

/// Cellular chain complex of the pair graph with the contractible 4-cycles
/// attached as 2-cells.  Edge orientation in d1 runs from the lower to the
/// higher node index; square boundaries in d2 follow the listed traversal
/// order of each 4-cycle.
struct ChainComplex {
    IntMatrix d1;  // v2 x e2 vertex-edge incidence
    IntMatrix d2;  // e2 x g2 edge-square incidence
};

ChainComplex build_complex(const TwoParticleGraph& g2,
                           const std::vector<ContractibleCycle>& squares);

struct HomologySummary {
    int betti = 0;
    std::vector<BigInt> torsion;  // divisors of d2 greater than one
};

// First homology of the complex, computed from boundary-map ranks and the
// Smith normal form of d2 alone.  Must reproduce the statistics
// classification (free phase count, discrete divisors) without touching
// the fundamental-cycle pipeline.  Throws NotAComplex if d1 * d2 != 0.
HomologySummary h1(const ChainComplex& c);

}  // namespace qsg

#endif
