#include "qsg/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace qsg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kExactTol = 1e-12;

using Complex = std::complex<double>;

Graph linear_graph(int n) {
    std::vector<VertexPair> edges;
    edges.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

double max_abs(const Eigen::MatrixXcd& m) {
    return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace

Hamiltonian kinetic_hamiltonian(const Graph& g) {
    const int v = g.vertex_count();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(v, v);
    for (Vertex j = 0; j < v; ++j)
        h(j, j) = g.degree(j);
    for (const auto& [a, b] : g.edges())
        h(a, b) = h(b, a) = -1.0;
    return Hamiltonian{g, std::move(h)};
}

Hamiltonian apply_gauge(const Hamiltonian& h, const GaugePotential& omega) {
    if (!h.host.same_shape(omega.host()))
        throw HostMismatch("apply_gauge: potential lives on a different graph");
    Eigen::MatrixXcd gauged = h.matrix;
    for (int e = 0; e < h.host.edge_count(); ++e) {
        auto [a, b] = h.host.edges()[e];
        double w = omega.edge_phases()[e];
        gauged(a, b) *= Complex(std::cos(w), std::sin(w));
        gauged(b, a) *= Complex(std::cos(w), -std::sin(w));
    }
    return Hamiltonian{h.host, std::move(gauged)};
}

Hamiltonian two_particle_hamiltonian(const Hamiltonian& h, int sigma,
                                     const TwoParticleGraph& g2) {
    if (!h.host.same_shape(g2.base))
        throw HostMismatch("two_particle_hamiltonian: base graph mismatch");
    if (sigma != 1 && sigma != -1)
        throw Error("sigma must be +1 or -1");

    const int v2 = g2.graph.vertex_count();
    const Eigen::MatrixXcd& one = h.matrix;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(v2, v2);
    const double s = sigma;
    for (int u = 0; u < v2; ++u) {
        auto [j, l] = g2.nodes[u];
        for (int w = 0; w < v2; ++w) {
            auto [k, m] = g2.nodes[w];
            Complex value(0.0, 0.0);
            if (j == k)
                value += one(l, m);
            if (j == m)
                value += s * one(l, k);
            if (l == k)
                value += s * one(j, m);
            if (l == m)
                value += one(j, k);
            out(u, w) = value;
        }
    }
    return Hamiltonian{g2.graph, std::move(out)};
}

Spectrum eigensolve(const Hamiltonian& h, bool want_vectors) {
    const Eigen::MatrixXcd& m = h.matrix;
    double scale = std::max(1.0, max_abs(m));
    if (max_abs(m - m.adjoint()) > kExactTol * scale)
        throw Error("eigensolve: matrix is not Hermitian");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("eigensolve: iteration did not converge");

    Spectrum out;
    out.eigenvalues = solver.eigenvalues();
    Eigen::MatrixXcd vectors = solver.eigenvectors();
    // deterministic phase: largest-magnitude component real and positive
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        Eigen::Index imax = 0;
        vectors.col(c).cwiseAbs().maxCoeff(&imax);
        Complex pivot = vectors(imax, c);
        if (std::abs(pivot) > 0.0)
            vectors.col(c) *= std::conj(pivot) / std::abs(pivot);
    }
    double residual = 0.0;
    for (Eigen::Index c = 0; c < vectors.cols(); ++c)
        residual = std::max(residual,
                            (m * vectors.col(c) - out.eigenvalues[c] * vectors.col(c)).norm());
    out.residual = residual;
    if (want_vectors)
        out.eigenvectors = std::move(vectors);
    return out;
}

EquivalenceReport distinguished_equivalence_check(const Hamiltonian& h, int sigma) {
    if (sigma != 1 && sigma != -1)
        throw Error("sigma must be +1 or -1");
    TwoParticleGraph g2 = build_two_particle(h.host);
    DistinguishedGraph dist = build_distinguished(h.host);

    const int n = static_cast<int>(dist.nodes.size());
    const Eigen::MatrixXcd& one = h.matrix;
    Eigen::MatrixXcd hbar = Eigen::MatrixXcd::Zero(n, n);
    for (int u = 0; u < n; ++u) {
        auto [j, l] = dist.nodes[u];
        for (int w = 0; w < n; ++w) {
            auto [k, m] = dist.nodes[w];
            Complex value(0.0, 0.0);
            if (l == m)
                value += one(j, k);
            if (j == k)
                value += one(l, m);
            hbar(u, w) = value;
        }
    }

    const int v2 = g2.graph.vertex_count();
    Eigen::MatrixXcd isometry = Eigen::MatrixXcd::Zero(n, v2);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int u = 0; u < v2; ++u) {
        auto [j, l] = g2.nodes[u];
        isometry(dist.node(j, l), u) = inv_sqrt2;
        isometry(dist.node(l, j), u) = sigma * inv_sqrt2;
    }

    Eigen::MatrixXcd conjugated = isometry.adjoint() * hbar * isometry;
    Hamiltonian pair = two_particle_hamiltonian(h, sigma, g2);

    EquivalenceReport report;
    report.conjugation_error = max_abs(conjugated - pair.matrix);

    Hamiltonian plus = two_particle_hamiltonian(h, 1, g2);
    Hamiltonian minus = two_particle_hamiltonian(h, -1, g2);
    Hamiltonian gauged = apply_gauge(plus, fermi_gauge(g2));
    report.fermi_gauge_error = max_abs(gauged.matrix - minus.matrix);

    if (report.conjugation_error > kExactTol || report.fermi_gauge_error > kExactTol)
        throw EquivalenceViolation("distinguished/identified scheme mismatch: conjugation " +
                                   std::to_string(report.conjugation_error) + ", fermi gauge " +
                                   std::to_string(report.fermi_gauge_error));
    return report;
}

std::vector<Spectrum> spectral_flow(const Graph& g,
                                    const std::vector<PhaseAssignment>& assignments) {
    TwoParticleGraph g2 = build_two_particle(g);
    ConstraintSystem cs = constraint_matrix(g2);
    PhaseClassification cls = classify(cs);
    Hamiltonian h2 = two_particle_hamiltonian(kinetic_hamiltonian(g), 1, g2);

    std::vector<Spectrum> out;
    out.reserve(assignments.size());
    for (const PhaseAssignment& assignment : assignments)
        out.push_back(eigensolve(apply_gauge(h2, synthesize_gauge(cs, cls, assignment))));
    return out;
}

GaugePotential landau_gauge(const TwoParticleGraph& g2, int r, int s, int t, int p) {
    Eigen::VectorXd phases = Eigen::VectorXd::Zero(g2.graph.edge_count());
    const double step = kTwoPi * p / t;
    for (int e = 0; e < g2.graph.edge_count(); ++e) {
        auto [u, w] = g2.graph.edges()[e];
        auto [j, l] = g2.nodes[u];
        auto [k, m] = g2.nodes[w];
        // on a chain the pair never reorders, so the mover is the higher
        // coordinate exactly when the lower coordinates agree
        if (j != k)
            continue;
        int lo = std::min(l, m);
        int hi = std::max(l, m);
        if (lo < s || hi > s + t)
            continue;
        phases[e] = (m > l ? 1.0 : -1.0) * step * std::clamp(j - r, 0, t);
    }
    return GaugePotential(g2.graph, std::move(phases));
}

LandauResult landau_experiment(int n, int r, int s, int t, int p) {
    if (n < 4)
        throw WindowOutOfRange("chain too short");
    if (t < 1 || r < 0 || s < 0 || r + t > n || s + t > n)
        throw WindowOutOfRange("flux window [" + std::to_string(r) + "," +
                               std::to_string(r + t) + "] x [" + std::to_string(s) + "," +
                               std::to_string(s + t) + "] does not fit on " +
                               std::to_string(n) + " vertices");

    TwoParticleGraph g2 = build_two_particle(linear_graph(n));
    Hamiltonian h2 = two_particle_hamiltonian(kinetic_hamiltonian(g2.base), -1, g2);
    Hamiltonian gauged = apply_gauge(h2, landau_gauge(g2, r, s, t, p));
    Spectrum spectrum = eigensolve(gauged, true);

    LandauResult out;
    out.eigenvalues = spectrum.eigenvalues;

    const int v2 = g2.graph.vertex_count();
    std::vector<char> in_window(v2, 0);
    for (int u = 0; u < v2; ++u) {
        auto [j, l] = g2.nodes[u];
        bool direct = j >= r && j <= r + t && l >= s && l <= s + t;
        bool swapped = l >= r && l <= r + t && j >= s && j <= s + t;
        if (direct || swapped) {
            in_window[u] = 1;
            out.window_nodes.push_back(u);
        }
    }

    out.ipr.resize(v2);
    out.window_mass.resize(v2);
    for (int c = 0; c < v2; ++c) {
        double ipr = 0.0, mass = 0.0;
        for (int u = 0; u < v2; ++u) {
            double w = std::norm(spectrum.eigenvectors(u, c));
            ipr += w * w;
            if (in_window[u])
                mass += w;
        }
        out.ipr[c] = ipr;
        out.window_mass[c] = mass;
    }

    Eigen::VectorXd sorted = out.ipr;
    std::sort(sorted.begin(), sorted.end());
    out.median_ipr = (v2 % 2) ? sorted[v2 / 2] : 0.5 * (sorted[v2 / 2 - 1] + sorted[v2 / 2]);
    for (int c = 0; c < v2; ++c)
        if (out.ipr[c] >= 3.0 * out.median_ipr && out.window_mass[c] >= 0.9)
            out.localized.push_back(c);
    return out;
}

}  // namespace qsg
