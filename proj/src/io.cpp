#include "mdim/io.hpp"

#include <sstream>

namespace mdim {

namespace {

std::vector<std::pair<int, int>> sorted_edges(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        g.row(u).for_each_set([&](int v) {
            if (u < v) edges.emplace_back(u, v);
        });
    return edges;  // already lexicographic: u ascending, then v ascending
}

}  // namespace

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.order() << "\n";
    for (auto [u, v] : sorted_edges(g)) out << "e " << u << " " << v << "\n";
    return out.str();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.order(); ++v) out << "  \"" << g.label(v) << "\";\n";
    for (auto [u, v] : sorted_edges(g))
        out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
    out << "}\n";
    return out.str();
}

nlohmann::ordered_json graph_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["order"] = g.order();
    j["labels"] = g.labels();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : sorted_edges(g)) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

std::string kind_name(ResolutionKind kind) {
    switch (kind) {
        case ResolutionKind::Resolving: return "RESOLVING";
        case ResolutionKind::Doubly: return "DOUBLY";
        case ResolutionKind::Strong: return "STRONG";
    }
    return "?";
}

nlohmann::ordered_json resolution_json(const ResolutionReport& report) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(report.kind);
    j["verdict"] = report.verdict;
    if (report.witness)
        j["witness"] = {report.witness->first, report.witness->second};
    else
        j["witness"] = nullptr;
    return j;
}

nlohmann::ordered_json dimension_json(const DimensionResult& result, ResolutionKind kind) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(kind);
    j["dimension"] = result.dimension;
    j["set"] = result.optimal_set.members();
    j["checked"] = result.search_space_checked;
    return j;
}

nlohmann::ordered_json spectrum_json(const SpectrumReport& report) {
    nlohmann::ordered_json j;
    auto roots = nlohmann::ordered_json::array();
    for (auto [value, multiplicity] : report.roots) roots.push_back({value, multiplicity});
    j["roots"] = std::move(roots);
    auto residual = nlohmann::ordered_json::array();
    for (const auto& c : report.residual) residual.push_back(c.str());
    j["residual"] = std::move(residual);
    return j;
}

nlohmann::ordered_json automorphism_json(const AutomorphismReport& report) {
    nlohmann::ordered_json j;
    j["order"] = report.order.str();
    j["generators"] = report.generators;
    j["transitive"] = report.transitive;
    return j;
}

nlohmann::ordered_json distance_regularity_json(const DistanceRegularityReport& report) {
    nlohmann::ordered_json j;
    j["verdict"] = report.verdict;
    if (report.verdict) {
        j["intersection_array"] = {{"b", report.b}, {"c", report.c}};
    } else if (report.witness) {
        j["witness"] = {{"r", report.witness->r},
                        {"pair1", {report.witness->u1, report.witness->v1}},
                        {"pair2", {report.witness->u2, report.witness->v2}}};
    } else if (report.degree_witness) {
        j["degree_witness"] = {report.degree_witness->first, report.degree_witness->second};
    }
    return j;
}

nlohmann::ordered_json profile_json(const GraphProfile& profile) {
    nlohmann::ordered_json j;
    if (profile.diameter == DistanceMatrix::kInfinite)
        j["diameter"] = nullptr;
    else
        j["diameter"] = profile.diameter;
    if (profile.regular_valency < 0)
        j["regular_valency"] = nullptr;
    else
        j["regular_valency"] = profile.regular_valency;
    j["bipartite"] = profile.bipartite;
    j["clique_number"] = profile.clique_number;
    j["edge_count"] = profile.edge_count;
    return j;
}

}  // namespace mdim
