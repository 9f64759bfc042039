// qsg: classify two-particle quantum statistics on combinatorial graphs,
// synthesize the corresponding gauge potentials, and compute gauged
// tight-binding spectra.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qsg/edge_list_io.hpp"
#include "qsg/gauge.hpp"
#include "qsg/gauge_io.hpp"
#include "qsg/graph.hpp"
#include "qsg/homology.hpp"
#include "qsg/int_matrix.hpp"
#include "qsg/pair_config.hpp"
#include "qsg/quantum.hpp"
#include "qsg/statistics.hpp"
#include "qsg/verify.hpp"
#include "qsg/version.hpp"

#ifndef QSG_CORPUS_DIR
#define QSG_CORPUS_DIR "data/corpus"
#endif

namespace {

using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw qsg::Error("cannot write '" + path + "'");
    out << content;
}

json json_bigint(const qsg::BigInt& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max())
        return value.convert_to<std::int64_t>();
    return value.str();
}

std::string pair_cycle_text(const qsg::TwoParticleGraph& g2, const qsg::Cycle& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto [j, l] = g2.nodes[c[i]];
        out += (i ? "-(" : "(") + std::to_string(j + 1) + "," + std::to_string(l + 1) + ")";
    }
    return out;
}

std::string format_double(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.15g", x);
    return buffer;
}

json tool_stanza() {
    return json{{"name", "qsg"}, {"version", qsg::kVersion}};
}

json conventions_stanza() {
    return json{
        {"vertices", "relabeled 0..v-1 by first appearance in the input; reported 1-based"},
        {"edges", "stored (lo,hi) and sorted lexicographically"},
        {"pair_nodes", "unordered pairs (j,l), j<l, in lexicographic order"},
        {"spanning_trees", "breadth-first from vertex 1, neighbors in ascending order"}};
}

int cmd_classify(const std::string& input, const std::string& output) {
    qsg::Graph g = qsg::load_graph(input);
    qsg::TwoParticleGraph g2 = qsg::build_two_particle(g);
    qsg::ConstraintSystem cs = qsg::constraint_matrix(g2);
    qsg::PhaseClassification cls = qsg::classify_statistics(g, cs);

    json edge_list = json::array();
    for (auto [a, b] : g.edges())
        edge_list.push_back(json::array({a + 1, b + 1}));

    json report;
    report["command"] = "classify";
    report["input"] = input;
    report["tool"] = tool_stanza();
    report["conventions"] = conventions_stanza();
    report["graph"] = {{"vertices", g.vertex_count()},
                       {"edges", g.edge_count()},
                       {"cycle_rank", g.edge_count() - g.vertex_count() + 1},
                       {"edge_list", edge_list}};
    report["pair_graph"] = {{"vertices", g2.graph.vertex_count()},
                            {"edges", g2.graph.edge_count()},
                            {"cycle_rank", cls.f2},
                            {"contractible_squares", cls.g2_count}};

    json divisors = json::array();
    for (const auto& d : cls.discrete_divisors)
        divisors.push_back(json_bigint(d));
    report["phases"] = {{"constraint_rank", cls.rank},
                        {"free_total", cls.free_count},
                        {"aharonov_bohm", cls.ab_count},
                        {"two_body", cls.two_body_count},
                        {"discrete_divisors", divisors},
                        {"augmented_rank", cls.augmented_rank}};

    json anchored = json::array();
    if (!qsg::is_circular(g))
        for (const qsg::Cycle& c : qsg::ab_anchor_cycles(g, g2))
            anchored.push_back(pair_cycle_text(g2, c));
    json witnesses = json::array();
    for (std::size_t k = 0; k < cls.discrete_divisors.size(); ++k) {
        json multiplicities = json::array();
        int row = cls.unit_divisors + static_cast<int>(k);
        for (int j = 0; j < cls.f2; ++j)
            multiplicities.push_back(json_bigint(cls.snf.q(row, j)));
        witnesses.push_back({{"divisor", json_bigint(cls.discrete_divisors[k])},
                             {"fundamental_multiplicities", multiplicities}});
    }
    report["generators"] = {{"ab_anchored_cycles", anchored},
                            {"ring_flux_generated", qsg::is_circular(g)},
                            {"discrete_witnesses", witnesses}};

    write_output(output, report.dump(2) + "\n");
    return 0;
}

qsg::PhaseAssignment make_assignment(const qsg::PhaseClassification& cls,
                                     const std::vector<double>& alphas,
                                     const std::vector<long>& discretes) {
    qsg::PhaseAssignment assignment;
    if (!alphas.empty() && static_cast<int>(alphas.size()) != cls.free_count)
        throw qsg::DimensionMismatch("expected " + std::to_string(cls.free_count) +
                                     " --alpha values, got " + std::to_string(alphas.size()));
    if (!discretes.empty() && discretes.size() != cls.discrete_divisors.size())
        throw qsg::DimensionMismatch("expected " +
                                     std::to_string(cls.discrete_divisors.size()) +
                                     " --discrete values, got " +
                                     std::to_string(discretes.size()));
    assignment.free_phases = Eigen::VectorXd::Zero(cls.free_count);
    for (std::size_t i = 0; i < alphas.size(); ++i)
        assignment.free_phases[static_cast<int>(i)] = alphas[i];
    assignment.discrete_selections.assign(cls.discrete_divisors.size(), 0);
    for (std::size_t i = 0; i < discretes.size(); ++i)
        assignment.discrete_selections[i] = discretes[i];
    return assignment;
}

int cmd_spectrum(const std::string& input, int sigma, const std::vector<double>& alphas,
                 const std::vector<long>& discretes, const std::string& output,
                 const std::string& gauge_output) {
    qsg::Graph g = qsg::load_graph(input);
    qsg::TwoParticleGraph g2 = qsg::build_two_particle(g);
    qsg::ConstraintSystem cs = qsg::constraint_matrix(g2);
    qsg::PhaseClassification cls = qsg::classify(cs);
    qsg::PhaseAssignment assignment = make_assignment(cls, alphas, discretes);

    qsg::Hamiltonian h2 =
        qsg::two_particle_hamiltonian(qsg::kinetic_hamiltonian(g), sigma, g2);
    qsg::GaugePotential omega2 = qsg::synthesize_gauge(cs, cls, assignment);
    if (!gauge_output.empty())
        write_output(gauge_output, qsg::gauge_to_json(omega2));
    qsg::Spectrum spectrum = qsg::eigensolve(qsg::apply_gauge(h2, omega2));

    std::ostringstream out;
    out << "# qsg " << qsg::kVersion << " spectrum\n";
    out << "# input=" << input << " sigma=" << (sigma > 0 ? "+1" : "-1") << "\n";
    out << "# alpha=[";
    for (int i = 0; i < assignment.free_phases.size(); ++i)
        out << (i ? "," : "") << format_double(assignment.free_phases[i]);
    out << "] discrete=[";
    for (std::size_t i = 0; i < assignment.discrete_selections.size(); ++i)
        out << (i ? "," : "") << assignment.discrete_selections[i];
    out << "]\n";
    out << "index,eigenvalue\n";
    for (int i = 0; i < spectrum.eigenvalues.size(); ++i)
        out << i << "," << format_double(spectrum.eigenvalues[i]) << "\n";
    write_output(output, out.str());
    return 0;
}

int cmd_sweep(const std::string& input, int steps, const std::string& output) {
    if (steps < 2)
        throw qsg::Error("--steps must be at least 2");
    qsg::Graph g = qsg::load_graph(input);
    qsg::TwoParticleGraph g2 = qsg::build_two_particle(g);
    qsg::ConstraintSystem cs = qsg::constraint_matrix(g2);
    qsg::PhaseClassification cls = qsg::classify(cs);
    if (cls.free_count == 0)
        throw qsg::Error("graph has no free statistics phase to sweep");

    std::vector<qsg::PhaseAssignment> assignments;
    for (int k = 0; k < steps; ++k) {
        qsg::PhaseAssignment a;
        a.free_phases = Eigen::VectorXd::Zero(cls.free_count);
        a.free_phases[0] = kTwoPi * k / (steps - 1);
        a.discrete_selections.assign(cls.discrete_divisors.size(), 0);
        assignments.push_back(std::move(a));
    }
    std::vector<qsg::Spectrum> spectra = qsg::spectral_flow(g, assignments);

    std::ostringstream out;
    out << "# qsg " << qsg::kVersion << " sweep\n";
    out << "# input=" << input << " steps=" << steps
        << " (free phase 0 swept over [0,2pi], all other phases zero)\n";
    out << "step,alpha";
    for (int i = 0; i < spectra.front().eigenvalues.size(); ++i)
        out << ",ev" << i;
    out << "\n";
    for (int k = 0; k < steps; ++k) {
        out << k << "," << format_double(assignments[k].free_phases[0]);
        for (int i = 0; i < spectra[k].eigenvalues.size(); ++i)
            out << "," << format_double(spectra[k].eigenvalues[i]);
        out << "\n";
    }
    write_output(output, out.str());
    return 0;
}

int cmd_landau(int n, int r, int s, int t, int p, const std::string& output) {
    qsg::LandauResult result = qsg::landau_experiment(n, r, s, t, p);
    json report;
    report["command"] = "landau";
    report["tool"] = tool_stanza();
    report["params"] = {{"n", n}, {"r", r}, {"s", s}, {"t", t}, {"p", p}};
    report["eigenvalues"] = std::vector<double>(result.eigenvalues.begin(),
                                                result.eigenvalues.end());
    report["ipr"] = std::vector<double>(result.ipr.begin(), result.ipr.end());
    report["window_mass"] =
        std::vector<double>(result.window_mass.begin(), result.window_mass.end());
    report["median_ipr"] = result.median_ipr;
    report["localized_indices"] = result.localized;
    write_output(output, report.dump(2) + "\n");
    return 0;
}

std::vector<std::string> corpus_files(const std::string& dir) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".edges")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw qsg::Error("no .edges files in '" + dir + "'");
    return files;
}

int cmd_verify(const std::string& input, const std::string& corpus, unsigned seed,
               double tol, bool corrupt) {
    std::vector<std::string> files =
        input.empty() ? corpus_files(corpus) : std::vector<std::string>{input};
    qsg::VerifyOptions options;
    options.seed = seed;
    options.spectral_tol = tol;
    options.corrupt_constraints = corrupt;
    std::vector<qsg::CheckResult> results = qsg::run_verification(files, options);

    int failures = 0;
    for (const qsg::CheckResult& check : results) {
        std::cout << (check.ok ? "ok   " : "FAIL ") << check.name;
        if (!check.detail.empty())
            std::cout << " (" << check.detail << ")";
        std::cout << "\n";
        if (!check.ok)
            ++failures;
    }
    std::cout << results.size() << " checks, " << failures << " failed\n";
    return failures ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum statistics of two particles on combinatorial graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", qsg::kVersion);

    std::string input, output, corpus = QSG_CORPUS_DIR;
    int sigma = 1, steps = 64;
    int n = 40, r = 10, s = 25, t = 5, p = 1;
    unsigned seed = 12345;
    double tol = 1e-9;
    bool corrupt = false;
    std::vector<double> alphas;
    std::vector<long> discretes;

    CLI::App* classify = app.add_subcommand("classify", "statistics phase classification report");
    classify->add_option("--input", input, "edge-list file")->required();
    classify->add_option("--output", output, "output path (default stdout)");

    CLI::App* spectrum = app.add_subcommand("spectrum", "gauged two-particle spectrum as CSV");
    spectrum->add_option("--input", input, "edge-list file")->required();
    spectrum->add_option("--sigma", sigma, "+1 hard-core bosons, -1 fermions")
        ->check(CLI::IsMember({1, -1}));
    spectrum->add_option("--alpha", alphas, "free phase values (repeatable)");
    spectrum->add_option("--discrete", discretes, "discrete selections m_k (repeatable)");
    std::string gauge_output;
    spectrum->add_option("--gauge-output", gauge_output,
                         "also write the synthesized gauge potential as JSON");
    spectrum->add_option("--output", output, "output path (default stdout)");

    CLI::App* sweep = app.add_subcommand("sweep", "sweep the first free phase over [0,2pi]");
    sweep->add_option("--input", input, "edge-list file")->required();
    sweep->add_option("--steps", steps, "number of grid points including both endpoints");
    sweep->add_option("--output", output, "output path (default stdout)");

    CLI::App* landau = app.add_subcommand("landau", "flux-window localization experiment");
    landau->add_option("--n", n, "chain length");
    landau->add_option("--r", r, "first window start (0-based vertex)");
    landau->add_option("--s", s, "second window start (0-based vertex)");
    landau->add_option("--t", t, "window size (flux per square is 2pi*p/t)");
    landau->add_option("--p", p, "flux numerator");
    landau->add_option("--output", output, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "cross-validation suite");
    verify->add_option("--input", input, "verify a single edge-list file");
    verify->add_option("--corpus", corpus, "directory of bundled .edges files");
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->add_option("--tol", tol, "tolerance for the spectral identity checks");
    verify->add_flag("--corrupt-constraints", corrupt)->group("");  // test hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (classify->parsed())
            return cmd_classify(input, output);
        if (spectrum->parsed())
            return cmd_spectrum(input, sigma, alphas, discretes, output, gauge_output);
        if (sweep->parsed())
            return cmd_sweep(input, steps, output);
        if (landau->parsed())
            return cmd_landau(n, r, s, t, p, output);
        if (verify->parsed())
            return cmd_verify(verify->count("--input") ? input : "", corpus, seed, tol,
                              corrupt);
    } catch (const qsg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
