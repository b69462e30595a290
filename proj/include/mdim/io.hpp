#ifndef MDIM_IO_HPP
#define MDIM_IO_HPP

#include <string>

#include <json.hpp>

#include "mdim/automorphisms.hpp"
#include "mdim/distance.hpp"
#include "mdim/distance_regular.hpp"
#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"
#include "mdim/spectrum.hpp"

namespace mdim {

/// "p <order>" header, then one "e <u> <v>" line per edge, 0-indexed, u < v,
/// edges sorted lexicographically.
std::string to_edge_list(const Graph& g);

/// Undirected DOT with vertex labels as node names.
std::string to_dot(const Graph& g);

/// {"order": int, "labels": [...], "edges": [[u,v], ...]}, edges sorted
/// lexicographically with u < v.
nlohmann::ordered_json graph_json(const Graph& g);

nlohmann::ordered_json resolution_json(const ResolutionReport& report);

nlohmann::ordered_json dimension_json(const DimensionResult& result, ResolutionKind kind);

/// {"roots": [[value, multiplicity], ...], "residual": [coefficients...]}
/// with residual coefficients by ascending power as decimal strings.
nlohmann::ordered_json spectrum_json(const SpectrumReport& report);

/// {"order": decimal string, "generators": [[...], ...], "transitive": bool}.
nlohmann::ordered_json automorphism_json(const AutomorphismReport& report);

nlohmann::ordered_json distance_regularity_json(const DistanceRegularityReport& report);

nlohmann::ordered_json profile_json(const GraphProfile& profile);

std::string kind_name(ResolutionKind kind);

}  // namespace mdim

#endif
