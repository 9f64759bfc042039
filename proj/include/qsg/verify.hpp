#ifndef QSG_VERIFY_HPP
#define QSG_VERIFY_HPP

#include <string>
#include <vector>

namespace qsg {

struct VerifyOptions {
    unsigned seed = 12345;
    int random_graphs = 50;
    int random_matrices = 200;
    double spectral_tol = 1e-9;
    // Test hook: scales one constraint row of the first graph by 3, which
    // must be caught as InconsistentDiscretePhases.
    bool corrupt_constraints = false;
};

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Cross-validation suite: the fundamental-cycle classification against the
// homology oracle on the given graphs and on seeded random graphs, the
// distinguished/identified equivalences, the Fermi-gauge spectral
// identity, topological-ness of lifted potentials, and the Smith normal
// form identities on random matrices.
std::vector<CheckResult> run_verification(const std::vector<std::string>& graph_files,
                                          const VerifyOptions& options);

}  // namespace qsg

#endif
