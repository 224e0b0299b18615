#pragma once

#include <string>

#include <json.hpp>

#include "turan/ballooning.hpp"
#include "turan/enumerate.hpp"
#include "turan/extremal.hpp"
#include "turan/graph.hpp"

namespace turan {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "turan-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

// Plain text interchange: "n m" header then one "u v" line per edge.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

std::string to_dot(const Graph& g);

/// Graph argument dispatch for the CLI: named constructor when it looks
/// like one ("star:3"), an edge-list file when the path exists, otherwise a
/// graph6 literal.
Graph parse_graph_argument(const std::string& text);

Json graph_summary(const Graph& g);

Json to_json(const Embedding& emb);
Json to_json(const SubgraphStats& stats);
Json to_json(const FreenessCertificate& cert);
Json to_json(const BallooningSpec& spec);
Json to_json(const DecompositionFamily& family, const ExtremalProfile& prof);
Json to_json(const ConstructionRecipe& recipe);
Json to_json(const BoundsReport& report);

/// Report envelope shared by every CLI command.
Json make_report(const std::string& command, Json inputs, Json result);

/// Human-readable rendering of a report (the --format text path).
std::string render_text(const Json& report);

} // namespace turan
