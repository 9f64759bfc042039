#include "qsg/gauge.hpp"

#include <cmath>
#include <numbers>

namespace qsg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPi = std::numbers::pi;
}  // namespace

double distance_to_two_pi_multiple(double x) {
    return std::abs(x - kTwoPi * std::round(x / kTwoPi));
}

GaugePotential::GaugePotential(Graph host, Eigen::VectorXd edge_phases)
    : host_(std::move(host)), phases_(std::move(edge_phases)) {
    if (phases_.size() != host_.edge_count())
        throw DimensionMismatch("gauge potential needs one phase per edge");
}

GaugePotential GaugePotential::zero(const Graph& host) {
    return GaugePotential(host, Eigen::VectorXd::Zero(host.edge_count()));
}

double GaugePotential::phase(Vertex from, Vertex to) const {
    int e = host_.edge_index(from, to);
    if (e < 0)
        throw PathNotOnGraph("no edge between the given vertices");
    return from < to ? phases_[e] : -phases_[e];
}

double flux(const GaugePotential& omega, const Path& p) {
    if (!is_path(omega.host(), p))
        throw PathNotOnGraph("flux: not a path on the host graph");
    double sum = 0.0;
    for (std::size_t r = 0; r + 1 < p.size(); ++r)
        sum += omega.phase(p[r], p[r + 1]);
    return sum;
}

bool is_trivial(const GaugePotential& omega, const SpanningTree& t, double tol) {
    if (!t.graph().same_shape(omega.host()))
        throw HostMismatch("is_trivial: tree spans a different graph");
    for (int phi = 0; phi < t.cycle_count(); ++phi)
        if (distance_to_two_pi_multiple(flux(omega, fundamental_cycle(t, phi))) > tol)
            return false;
    return true;
}

GaugePotential from_cycle_fluxes(const SpanningTree& t, const Eigen::VectorXd& fluxes) {
    if (fluxes.size() != t.cycle_count())
        throw DimensionMismatch("need one flux per non-tree edge");
    Eigen::VectorXd phases = Eigen::VectorXd::Zero(t.graph().edge_count());
    for (int phi = 0; phi < t.cycle_count(); ++phi)
        phases[t.non_tree_edge(phi)] = fluxes[phi];
    return GaugePotential(t.graph(), std::move(phases));
}

GaugePotential ab_lift(const GaugePotential& omega, const TwoParticleGraph& g2) {
    if (!omega.host().same_shape(g2.base))
        throw BaseMismatch("ab_lift: potential lives on a different base graph");
    Eigen::VectorXd phases(g2.graph.edge_count());
    for (int e = 0; e < g2.graph.edge_count(); ++e) {
        auto [u, w] = g2.graph.edges()[e];
        auto [j, l] = g2.nodes[u];
        auto [k, m] = g2.nodes[w];
        // the shared base vertex stays put; the mover picks up the phase
        Vertex shared = (j == k || j == m) ? j : l;
        Vertex from = (shared == j) ? l : j;
        Vertex to = (shared == k) ? m : k;
        phases[e] = omega.phase(from, to);
    }
    return GaugePotential(g2.graph, std::move(phases));
}

GaugePotential fermi_gauge(const TwoParticleGraph& g2) {
    Eigen::VectorXd phases = Eigen::VectorXd::Zero(g2.graph.edge_count());
    for (int e = 0; e < g2.graph.edge_count(); ++e) {
        auto [u, w] = g2.graph.edges()[e];
        auto [j, l] = g2.nodes[u];
        auto [k, m] = g2.nodes[w];
        if (j == m)
            phases[e] = kPi;  // lower particle of u becomes the higher of w
        else if (l == k)
            phases[e] = -kPi;
    }
    return GaugePotential(g2.graph, std::move(phases));
}

}  // namespace qsg
