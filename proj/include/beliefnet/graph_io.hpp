#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "beliefnet/fusion.hpp"
#include "beliefnet/graph.hpp"

namespace beliefnet {

/// One focal-set assignment as written in a document: element labels and a
/// mass value.
struct MassEntry {
    std::vector<std::string> focal;
    double value = 0.0;
};

/// A mass as written in a document: either the "vacuous" shorthand or an
/// explicit list of entries.
struct MassSpec {
    bool vacuous = false;
    std::vector<MassEntry> entries;
};

struct NodeSpec {
    std::string id;
    MassSpec mass;
};

struct EdgeSpec {
    std::string from;
    std::string to;
    bool directed = true; // an undirected edge expands into both ordered pairs
    MassSpec mass;
};

struct MessageSpec {
    std::string id;
    std::string from;
    std::string to;
    MassSpec mass;
};

/// The graph file, structurally parsed but not yet validated. Field contents
/// mirror the JSON schema one to one.
struct GraphDocument {
    std::string version;
    std::vector<std::string> node_labels;
    std::vector<std::string> link_labels;
    std::vector<std::string> message_labels;
    /// (node label, link label) → list of message-frame labels.
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> gamma;
    std::vector<NodeSpec> nodes;
    std::vector<EdgeSpec> edges;
    std::vector<MessageSpec> messages;
};

/// Structural interpretation of parsed JSON. Shape violations (missing or
/// wrongly-typed fields) come back as BadStructure diagnostics; on any
/// diagnostic the document is unusable.
std::vector<Diagnostic> parse_document(const nlohmann::json& j, GraphDocument& out);

/// Semantic validation: frame label sanity, mass sums, gamma coverage,
/// referential integrity. Empty result means build_graph will succeed.
std::vector<Diagnostic> validate_document(const GraphDocument& doc);

/// Builds the evidential graph from a clean document. Throws Error if the
/// document does not validate.
EvidentialGraph build_graph(const GraphDocument& doc);

struct LoadResult {
    std::optional<EvidentialGraph> graph;
    std::vector<Diagnostic> diagnostics; // empty iff graph is set
};

/// Reads, parses, validates, and builds in one step.
LoadResult load_graph(const std::string& path);
LoadResult load_graph_from_json(const nlohmann::json& j);

/// Document for an existing graph; load(save(g)) fuses bit-identically to g.
GraphDocument document_from_graph(const EvidentialGraph& graph);

nlohmann::ordered_json to_json(const GraphDocument& doc);
nlohmann::ordered_json report_to_json(const FusionReport& report);

/// Frames and gamma table used by generated graphs: a small social-network
/// taxonomy (person/company/association/place nodes, friendly/family/
/// professional links, four message classes).
GraphDocument default_skeleton();

/// Reproducible random graph over the default skeleton: `node_count` nodes,
/// each ordered pair an edge with probability `density`, messages attached to
/// roughly half the edges. Identical arguments give identical documents.
GraphDocument random_graph_document(std::size_t node_count, double density, std::uint32_t seed);

/// Parses {"frame": [labels], "mass": entries-or-"vacuous"} into a mass
/// function. Empty focal sets are admitted when `allow_conflict` is set, so
/// unnormalized combination results can be fed back in.
MassFunction mass_from_json(const nlohmann::json& j, bool allow_conflict = true);

} // namespace beliefnet
