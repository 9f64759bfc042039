#include "qsg/verify.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <sstream>

#include "qsg/edge_list_io.hpp"
#include "qsg/gauge.hpp"
#include "qsg/homology.hpp"
#include "qsg/int_matrix.hpp"
#include "qsg/pair_config.hpp"
#include "qsg/quantum.hpp"
#include "qsg/random_graph.hpp"
#include "qsg/statistics.hpp"

namespace qsg {

namespace {

std::string divisor_list(const std::vector<BigInt>& ds) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < ds.size(); ++i)
        out << (i ? "," : "") << ds[i];
    out << "]";
    return out.str();
}

bool spectra_match(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
    return a.size() == b.size() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

CheckResult oracle_check(const std::string& name, const Graph& g) {
    CheckResult check{name + ": classification matches homology oracle", false, ""};
    TwoParticleGraph g2 = build_two_particle(g);
    ConstraintSystem cs = constraint_matrix(g2);
    PhaseClassification cls = classify(cs);
    HomologySummary hom = h1(build_complex(g2, cs.contractibles));
    std::ostringstream detail;
    detail << "free=" << cls.free_count << " betti=" << hom.betti
           << " discrete=" << divisor_list(cls.discrete_divisors)
           << " torsion=" << divisor_list(hom.torsion);
    check.detail = detail.str();
    check.ok = cls.free_count == hom.betti && cls.discrete_divisors == hom.torsion;
    return check;
}

CheckResult equivalence_check(const std::string& name, const Graph& g) {
    CheckResult check{name + ": distinguished-scheme and Fermi-gauge equivalences", false, ""};
    Hamiltonian h = kinetic_hamiltonian(g);
    try {
        EquivalenceReport plus = distinguished_equivalence_check(h, 1);
        EquivalenceReport minus = distinguished_equivalence_check(h, -1);
        std::ostringstream detail;
        detail << "max deviation " << std::max({plus.conjugation_error, plus.fermi_gauge_error,
                                                minus.conjugation_error,
                                                minus.fermi_gauge_error});
        check.detail = detail.str();
        check.ok = true;
    } catch (const EquivalenceViolation& err) {
        check.detail = err.what();
    }
    return check;
}

CheckResult gauge_check(const std::string& name, const Graph& g, std::mt19937& rng,
                        double spectral_tol) {
    CheckResult check{name + ": lifted potentials are topological, Fermi spectra agree", false,
                      ""};
    TwoParticleGraph g2 = build_two_particle(g);
    ConstraintSystem cs = constraint_matrix(g2);

    bool ok = is_topological(fermi_gauge(g2), cs);

    std::uniform_real_distribution<double> angle(0.0, 6.28);
    Eigen::VectorXd phases(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        phases[e] = angle(rng);
    ok = ok && is_topological(ab_lift(GaugePotential(g, phases), g2), cs);

    Hamiltonian h = kinetic_hamiltonian(g);
    Spectrum fermi = eigensolve(two_particle_hamiltonian(h, -1, g2));
    Spectrum gauged_bose =
        eigensolve(apply_gauge(two_particle_hamiltonian(h, 1, g2), fermi_gauge(g2)));
    ok = ok && spectra_match(fermi.eigenvalues, gauged_bose.eigenvalues, spectral_tol);

    check.ok = ok;
    check.detail = ok ? "" : "violation detected";
    return check;
}

// Negative hook: replacing a constraint row by twice an anchor row forges
// a spurious divisor 2 in the plain system that the augmented system
// cannot reproduce, so a healthy pipeline must refuse to classify.  The
// check therefore always fails, either with the detecting error or
// (worse) because the corruption slipped through.
CheckResult corruption_check() {
    CheckResult check{"classification of a deliberately corrupted constraint matrix", false,
                      ""};
    Graph lasso(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    TwoParticleGraph g2 = build_two_particle(lasso);
    ConstraintSystem cs = constraint_matrix(g2);
    std::vector<Cycle> anchors = ab_anchor_cycles(lasso, g2);
    Eigen::VectorXi anchor_row = cycle_decompose(anchors.front(), cs.tree2);
    for (int j = 0; j < cs.constraints.cols(); ++j)
        cs.constraints(0, j) = 2 * anchor_row[j];
    try {
        classify_with_ab(cs, anchors);
        check.detail = "corruption went unnoticed";
    } catch (const InconsistentDiscretePhases& err) {
        check.detail = std::string("InconsistentDiscretePhases: ") + err.what();
    }
    return check;
}

CheckResult snf_random_check(int count, std::mt19937& rng) {
    CheckResult check{"Smith normal form identities on random matrices", false, ""};
    std::uniform_int_distribution<int> dim(0, 8);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < count; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                m(i, j) = entry(rng);
        SnfResult s = snf(m);
        bool ok = s.p * s.d * s.q == m;
        ok = ok && boost::multiprecision::abs(determinant(s.p)) == 1;
        ok = ok && boost::multiprecision::abs(determinant(s.q)) == 1;
        ok = ok && s.p * s.p_inv == IntMatrix::identity(m.rows());
        ok = ok && s.q * s.q_inv == IntMatrix::identity(m.cols());
        ok = ok && s.rank == rank(m);
        for (std::size_t i = 1; i < s.divisors.size(); ++i)
            ok = ok && s.divisors[i] % s.divisors[i - 1] == 0;
        if (!ok) {
            check.detail = "failure at trial " + std::to_string(trial);
            return check;
        }
    }
    check.ok = true;
    check.detail = std::to_string(count) + " matrices";
    return check;
}

}  // namespace

std::vector<CheckResult> run_verification(const std::vector<std::string>& graph_files,
                                          const VerifyOptions& options) {
    std::vector<CheckResult> results;
    std::mt19937 rng(options.seed);

    for (const std::string& file : graph_files) {
        Graph g = load_graph(file);
        results.push_back(oracle_check(file, g));
        results.push_back(equivalence_check(file, g));
        results.push_back(gauge_check(file, g, rng, options.spectral_tol));
    }
    if (options.corrupt_constraints)
        results.push_back(corruption_check());

    for (int i = 0; i < options.random_graphs; ++i) {
        Graph g = random_connected_graph(rng, 3, 7);
        std::string name = "random graph " + std::to_string(i) + " (v=" +
                           std::to_string(g.vertex_count()) + ", e=" +
                           std::to_string(g.edge_count()) + ")";
        results.push_back(oracle_check(name, g));
    }

    results.push_back(snf_random_check(options.random_matrices, rng));
    return results;
}

}  // namespace qsg
