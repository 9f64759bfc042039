#include "qsg/gauge_io.hpp"

#include <json.hpp>

#include <vector>

namespace qsg {

using nlohmann::json;

std::string gauge_to_json(const GaugePotential& omega) {
    json records = json::array();
    const Graph& host = omega.host();
    for (int e = 0; e < host.edge_count(); ++e) {
        auto [a, b] = host.edges()[e];
        records.push_back({{"edge", {a + 1, b + 1}}, {"phase", omega.edge_phases()[e]}});
    }
    return records.dump(2) + "\n";
}

GaugePotential gauge_from_json(const Graph& host, const std::string& text) {
    json records;
    try {
        records = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("gauge JSON: ") + err.what());
    }
    if (!records.is_array())
        throw ParseError("gauge JSON: expected an array of records");

    Eigen::VectorXd phases = Eigen::VectorXd::Zero(host.edge_count());
    std::vector<char> seen(host.edge_count(), 0);
    for (const json& record : records) {
        if (!record.contains("edge") || !record.contains("phase") ||
            record["edge"].size() != 2)
            throw ParseError("gauge JSON: record needs \"edge\": [a,b] and \"phase\"");
        int a = record["edge"][0].get<int>() - 1;
        int b = record["edge"][1].get<int>() - 1;
        if (a < 0 || b < 0 || a >= host.vertex_count() || b >= host.vertex_count() ||
            host.edge_index(a, b) < 0)
            throw PathNotOnGraph("gauge JSON: no such edge on the host graph");
        int e = host.edge_index(a, b);
        if (seen[e])
            throw ParseError("gauge JSON: duplicate edge record");
        seen[e] = 1;
        double phase = record["phase"].get<double>();
        phases[e] = (a < b) ? phase : -phase;
    }
    for (int e = 0; e < host.edge_count(); ++e)
        if (!seen[e])
            throw ParseError("gauge JSON: missing edge record");
    return GaugePotential(host, std::move(phases));
}

}  // namespace qsg
