#include "beliefnet/graph_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "beliefnet/error.hpp"
#include "beliefnet/random.hpp"

namespace beliefnet {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kFormatVersion = "1";

void add(std::vector<Diagnostic>& diags, DiagnosticCode code, std::string where,
         std::string detail) {
    diags.push_back({code, std::move(where), std::move(detail)});
}

bool read_labels(const json& j, const std::string& where, std::vector<std::string>& out,
                 std::vector<Diagnostic>& diags) {
    if (!j.is_array()) {
        add(diags, DiagnosticCode::BadStructure, where, "expected an array of labels");
        return false;
    }
    for (const auto& item : j) {
        if (!item.is_string()) {
            add(diags, DiagnosticCode::BadStructure, where, "labels must be strings");
            return false;
        }
        out.push_back(item.get<std::string>());
    }
    return true;
}

bool read_mass_spec(const json& j, const std::string& where, MassSpec& out,
                    std::vector<Diagnostic>& diags) {
    if (j.is_string()) {
        if (j.get<std::string>() == "vacuous") {
            out.vacuous = true;
            return true;
        }
        add(diags, DiagnosticCode::BadStructure, where,
            "'vacuous' is the only mass shorthand, got '" + j.get<std::string>() + "'");
        return false;
    }
    if (!j.is_array()) {
        add(diags, DiagnosticCode::BadStructure, where,
            "expected \"vacuous\" or an array of {focal, value} entries");
        return false;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& entry = j[i];
        const std::string entry_where = where + "[" + std::to_string(i) + "]";
        if (!entry.is_object() || !entry.contains("focal") || !entry.contains("value")) {
            add(diags, DiagnosticCode::BadStructure, entry_where,
                "expected an object with 'focal' and 'value'");
            return false;
        }
        MassEntry e;
        if (!read_labels(entry["focal"], entry_where + ".focal", e.focal, diags)) return false;
        if (!entry["value"].is_number()) {
            add(diags, DiagnosticCode::BadStructure, entry_where + ".value", "expected a number");
            return false;
        }
        e.value = entry["value"].get<double>();
        out.entries.push_back(std::move(e));
    }
    return true;
}

std::string mass_where(const std::string& kind, const std::string& id) {
    return kind + " " + id + " mass";
}

} // namespace

std::vector<Diagnostic> parse_document(const json& j, GraphDocument& out) {
    std::vector<Diagnostic> diags;
    if (!j.is_object()) {
        add(diags, DiagnosticCode::BadStructure, "document", "top level must be an object");
        return diags;
    }
    if (!j.contains("version") || !j["version"].is_string()) {
        add(diags, DiagnosticCode::BadStructure, "version", "expected a string field 'version'");
    } else {
        out.version = j["version"].get<std::string>();
    }

    if (!j.contains("frames") || !j["frames"].is_object()) {
        add(diags, DiagnosticCode::BadStructure, "frames", "expected an object field 'frames'");
        return diags;
    }
    const json& frames = j["frames"];
    for (const char* key : {"nodes", "links", "messages"}) {
        if (!frames.contains(key)) {
            add(diags, DiagnosticCode::BadStructure, std::string("frames.") + key,
                "missing label list");
            return diags;
        }
    }
    if (!read_labels(frames["nodes"], "frames.nodes", out.node_labels, diags) ||
        !read_labels(frames["links"], "frames.links", out.link_labels, diags) ||
        !read_labels(frames["messages"], "frames.messages", out.message_labels, diags))
        return diags;

    if (!j.contains("gamma") || !j["gamma"].is_object()) {
        add(diags, DiagnosticCode::BadStructure, "gamma", "expected an object field 'gamma'");
        return diags;
    }
    for (const auto& [node_label, row] : j["gamma"].items()) {
        if (!row.is_object()) {
            add(diags, DiagnosticCode::BadStructure, "gamma." + node_label,
                "expected an object of link-label cells");
            return diags;
        }
        for (const auto& [link_label, cell] : row.items()) {
            std::vector<std::string> image;
            if (!read_labels(cell, "gamma." + node_label + "." + link_label, image, diags))
                return diags;
            out.gamma[{node_label, link_label}] = std::move(image);
        }
    }

    if (j.contains("nodes")) {
        if (!j["nodes"].is_array()) {
            add(diags, DiagnosticCode::BadStructure, "nodes", "expected an array");
            return diags;
        }
        for (const auto& jn : j["nodes"]) {
            if (!jn.is_object() || !jn.contains("id") || !jn["id"].is_string() ||
                !jn.contains("mass")) {
                add(diags, DiagnosticCode::BadStructure, "nodes",
                    "each node needs a string 'id' and a 'mass'");
                return diags;
            }
            NodeSpec spec;
            spec.id = jn["id"].get<std::string>();
            if (!read_mass_spec(jn["mass"], mass_where("node", spec.id), spec.mass, diags))
                return diags;
            out.nodes.push_back(std::move(spec));
        }
    }

    if (j.contains("edges")) {
        if (!j["edges"].is_array()) {
            add(diags, DiagnosticCode::BadStructure, "edges", "expected an array");
            return diags;
        }
        for (const auto& je : j["edges"]) {
            if (!je.is_object() || !je.contains("from") || !je["from"].is_string() ||
                !je.contains("to") || !je["to"].is_string() || !je.contains("mass")) {
                add(diags, DiagnosticCode::BadStructure, "edges",
                    "each edge needs string 'from'/'to' and a 'mass'");
                return diags;
            }
            EdgeSpec spec;
            spec.from = je["from"].get<std::string>();
            spec.to = je["to"].get<std::string>();
            if (je.contains("directed")) {
                if (!je["directed"].is_boolean()) {
                    add(diags, DiagnosticCode::BadStructure,
                        "edge " + spec.from + "->" + spec.to, "'directed' must be a boolean");
                    return diags;
                }
                spec.directed = je["directed"].get<bool>();
            }
            if (!read_mass_spec(je["mass"], mass_where("edge", spec.from + "->" + spec.to),
                                spec.mass, diags))
                return diags;
            out.edges.push_back(std::move(spec));
        }
    }

    if (j.contains("messages")) {
        if (!j["messages"].is_array()) {
            add(diags, DiagnosticCode::BadStructure, "messages", "expected an array");
            return diags;
        }
        for (const auto& jm : j["messages"]) {
            if (!jm.is_object() || !jm.contains("id") || !jm["id"].is_string() ||
                !jm.contains("from") || !jm["from"].is_string() || !jm.contains("to") ||
                !jm["to"].is_string() || !jm.contains("mass")) {
                add(diags, DiagnosticCode::BadStructure, "messages",
                    "each message needs string 'id'/'from'/'to' and a 'mass'");
                return diags;
            }
            MessageSpec spec;
            spec.id = jm["id"].get<std::string>();
            spec.from = jm["from"].get<std::string>();
            spec.to = jm["to"].get<std::string>();
            if (!read_mass_spec(jm["mass"], mass_where("message", spec.id), spec.mass, diags))
                return diags;
            out.messages.push_back(std::move(spec));
        }
    }
    return diags;
}

namespace {

void validate_frame_labels(const std::vector<std::string>& labels, const std::string& where,
                           std::size_t cap, std::vector<Diagnostic>& diags) {
    if (labels.empty()) {
        add(diags, DiagnosticCode::BadStructure, where, "frame needs at least one label");
        return;
    }
    if (labels.size() > cap)
        add(diags, DiagnosticCode::BadStructure, where,
            std::to_string(labels.size()) + " elements exceeds the cap of " + std::to_string(cap));
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty()) add(diags, DiagnosticCode::BadStructure, where, "empty label");
        else if (!seen.insert(l).second)
            add(diags, DiagnosticCode::BadStructure, where, "duplicate label '" + l + "'");
    }
}

void validate_mass_spec(const MassSpec& spec, const std::vector<std::string>& frame_labels,
                        const std::string& where, std::vector<Diagnostic>& diags) {
    if (spec.vacuous) return;
    double sum = 0.0;
    bool sum_meaningful = true;
    if (spec.entries.empty()) {
        add(diags, DiagnosticCode::BadSum, where, "no mass entries");
        return;
    }
    for (const auto& entry : spec.entries) {
        if (entry.focal.empty())
            add(diags, DiagnosticCode::EmptyFocal, where, "empty focal set");
        for (const auto& label : entry.focal) {
            if (std::find(frame_labels.begin(), frame_labels.end(), label) == frame_labels.end())
                add(diags, DiagnosticCode::UnknownLabel, where,
                    "label '" + label + "' is not in the declared frame");
        }
        if (!std::isfinite(entry.value) || entry.value <= 0.0) {
            add(diags, DiagnosticCode::BadMass, where,
                "mass " + std::to_string(entry.value) + " must be positive and finite");
            sum_meaningful = false;
        } else {
            sum += entry.value;
        }
    }
    if (sum_meaningful && std::abs(sum - 1.0) > 1e-9)
        add(diags, DiagnosticCode::BadSum, where, "masses sum to " + std::to_string(sum));
}

} // namespace

std::vector<Diagnostic> validate_document(const GraphDocument& doc) {
    std::vector<Diagnostic> diags;
    if (doc.version != kFormatVersion)
        add(diags, DiagnosticCode::BadVersion, "version",
            "unsupported version '" + doc.version + "', expected '" + kFormatVersion + "'");

    validate_frame_labels(doc.node_labels, "frames.nodes", Frame::kMaxAtomicElements, diags);
    validate_frame_labels(doc.link_labels, "frames.links", Frame::kMaxAtomicElements, diags);
    validate_frame_labels(doc.message_labels, "frames.messages", Frame::kMaxAtomicElements, diags);
    if (!diags.empty()) return diags; // frame trouble makes the rest unreadable

    if (doc.node_labels.size() * doc.link_labels.size() > Frame::kMaxProductElements)
        add(diags, DiagnosticCode::BadStructure, "frames",
            "node and link frames multiply beyond " + std::to_string(Frame::kMaxProductElements) +
                " product elements");

    auto known = [](const std::vector<std::string>& labels, const std::string& l) {
        return std::find(labels.begin(), labels.end(), l) != labels.end();
    };

    // Gamma: known labels, non-empty cells, full coverage.
    for (const auto& [key, image] : doc.gamma) {
        const std::string where = "gamma(" + key.first + ", " + key.second + ")";
        if (!known(doc.node_labels, key.first))
            add(diags, DiagnosticCode::UnknownLabel, where,
                "'" + key.first + "' is not a node label");
        if (!known(doc.link_labels, key.second))
            add(diags, DiagnosticCode::UnknownLabel, where,
                "'" + key.second + "' is not a link label");
        if (image.empty()) add(diags, DiagnosticCode::EmptyFocal, where, "empty image");
        for (const auto& l : image)
            if (!known(doc.message_labels, l))
                add(diags, DiagnosticCode::UnknownLabel, where,
                    "'" + l + "' is not a message label");
    }
    for (const auto& n : doc.node_labels)
        for (const auto& l : doc.link_labels)
            if (!doc.gamma.count({n, l}))
                add(diags, DiagnosticCode::MissingGammaCell, "gamma(" + n + ", " + l + ")",
                    "cell is not defined");

    std::set<std::string> node_ids;
    for (const auto& node : doc.nodes) {
        if (!node_ids.insert(node.id).second)
            add(diags, DiagnosticCode::DuplicateId, "node " + node.id, "declared twice");
        validate_mass_spec(node.mass, doc.node_labels, mass_where("node", node.id), diags);
    }

    std::set<std::pair<std::string, std::string>> edge_pairs;
    for (const auto& edge : doc.edges) {
        const std::string name = edge.from + (edge.directed ? "->" : "<->") + edge.to;
        if (!node_ids.count(edge.from))
            add(diags, DiagnosticCode::DanglingEdge, "edge " + name,
                "endpoint '" + edge.from + "' is not a declared node");
        if (!node_ids.count(edge.to))
            add(diags, DiagnosticCode::DanglingEdge, "edge " + name,
                "endpoint '" + edge.to + "' is not a declared node");
        if (!edge_pairs.insert({edge.from, edge.to}).second)
            add(diags, DiagnosticCode::DuplicateId, "edge " + name, "ordered pair declared twice");
        if (!edge.directed && !edge_pairs.insert({edge.to, edge.from}).second)
            add(diags, DiagnosticCode::DuplicateId, "edge " + name,
                "reverse ordered pair declared twice");
        validate_mass_spec(edge.mass, doc.link_labels, mass_where("edge", name), diags);
    }

    std::set<std::string> message_ids;
    for (const auto& msg : doc.messages) {
        if (!message_ids.insert(msg.id).second)
            add(diags, DiagnosticCode::DuplicateId, "message " + msg.id, "declared twice");
        if (!edge_pairs.count({msg.from, msg.to}))
            add(diags, DiagnosticCode::DanglingEdge, "message " + msg.id,
                "no edge " + msg.from + "->" + msg.to);
        validate_mass_spec(msg.mass, doc.message_labels, mass_where("message", msg.id), diags);
    }
    return diags;
}

namespace {

MassFunction mass_from_spec(const MassSpec& spec, const FramePtr& frame) {
    if (spec.vacuous) return MassFunction::vacuous(frame);
    std::vector<MassFunction::Assignment> assignments;
    assignments.reserve(spec.entries.size());
    for (const auto& entry : spec.entries)
        assignments.emplace_back(FocalSet::from_labels(frame, entry.focal), entry.value);
    return MassFunction::make(frame, assignments);
}

MassSpec spec_from_mass(const MassFunction& mass) {
    MassSpec spec;
    if (mass.is_vacuous()) {
        spec.vacuous = true;
        return spec;
    }
    for (const auto& [bits, w] : mass.focals())
        spec.entries.push_back({FocalSet(mass.frame(), bits).labels(), w});
    return spec;
}

} // namespace

EvidentialGraph build_graph(const GraphDocument& doc) {
    if (auto diags = validate_document(doc); !diags.empty()) {
        std::ostringstream msg;
        msg << "document does not validate: " << diags.front()
            << (diags.size() > 1 ? " (+" + std::to_string(diags.size() - 1) + " more)" : "");
        throw Error(msg.str());
    }
    const FramePtr nodes_frame = Frame::make(doc.node_labels, "nodes");
    const FramePtr links_frame = Frame::make(doc.link_labels, "links");
    const FramePtr messages_frame = Frame::make(doc.message_labels, "messages");

    std::map<std::pair<std::string, std::string>, FocalSet> cells;
    for (const auto& [key, image] : doc.gamma)
        cells.emplace(key, FocalSet::from_labels(messages_frame, image));

    EvidentialGraph graph(GammaTable(nodes_frame, links_frame, messages_frame, cells));
    for (const auto& node : doc.nodes)
        graph.add_node(node.id, mass_from_spec(node.mass, nodes_frame));
    for (const auto& edge : doc.edges) {
        MassFunction mass = mass_from_spec(edge.mass, links_frame);
        graph.add_edge(edge.from, edge.to, mass);
        if (!edge.directed) graph.add_edge(edge.to, edge.from, std::move(mass));
    }
    for (const auto& msg : doc.messages)
        graph.attach_message(msg.id, msg.from, msg.to, mass_from_spec(msg.mass, messages_frame));
    return graph;
}

LoadResult load_graph_from_json(const json& j) {
    GraphDocument doc;
    if (auto diags = parse_document(j, doc); !diags.empty()) return {std::nullopt, std::move(diags)};
    if (auto diags = validate_document(doc); !diags.empty())
        return {std::nullopt, std::move(diags)};
    return {build_graph(doc), {}};
}

LoadResult load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) return {std::nullopt, {{DiagnosticCode::ParseError, path, "cannot open file"}}};
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        return {std::nullopt, {{DiagnosticCode::ParseError, path, e.what()}}};
    }
    return load_graph_from_json(j);
}

GraphDocument document_from_graph(const EvidentialGraph& graph) {
    GraphDocument doc;
    doc.version = kFormatVersion;
    doc.node_labels = graph.node_frame()->labels();
    doc.link_labels = graph.link_frame()->labels();
    doc.message_labels = graph.message_frame()->labels();
    for (const auto& n : doc.node_labels)
        for (const auto& l : doc.link_labels)
            doc.gamma[{n, l}] = graph.gamma().cell(n, l).labels();
    for (const auto& [id, node] : graph.nodes())
        doc.nodes.push_back({id, spec_from_mass(node.mass)});
    for (const auto& [key, edge] : graph.edges())
        doc.edges.push_back({key.first, key.second, true, spec_from_mass(edge.mass)});
    for (const auto& [id, msg] : graph.messages())
        doc.messages.push_back({id, msg.from, msg.to, spec_from_mass(msg.mass)});
    return doc;
}

namespace {

ordered_json mass_spec_to_json(const MassSpec& spec) {
    if (spec.vacuous) return "vacuous";
    ordered_json out = ordered_json::array();
    for (const auto& entry : spec.entries)
        out.push_back({{"focal", entry.focal}, {"value", entry.value}});
    return out;
}

ordered_json mass_to_json(const MassFunction& mass) {
    ordered_json out = ordered_json::array();
    for (const auto& [bits, w] : mass.focals())
        out.push_back({{"focal", FocalSet(mass.frame(), bits).labels()}, {"value", w}});
    return out;
}

const char* to_string(TransportStrategy s) {
    return s == TransportStrategy::Ignorance ? "ignorance" : "union";
}

const char* to_string(RuleMix rule) {
    switch (rule) {
        case RuleMix::Conjunctive: return "conjunctive";
        case RuleMix::Dempster: return "dempster";
        case RuleMix::Default: break;
    }
    return "default";
}

} // namespace

ordered_json to_json(const GraphDocument& doc) {
    ordered_json j;
    j["version"] = doc.version;
    j["frames"] = {{"nodes", doc.node_labels},
                   {"links", doc.link_labels},
                   {"messages", doc.message_labels}};
    ordered_json gamma = ordered_json::object();
    for (const auto& n : doc.node_labels) {
        ordered_json row = ordered_json::object();
        for (const auto& l : doc.link_labels) {
            auto it = doc.gamma.find({n, l});
            if (it != doc.gamma.end()) row[l] = it->second;
        }
        gamma[n] = std::move(row);
    }
    j["gamma"] = std::move(gamma);
    j["nodes"] = ordered_json::array();
    for (const auto& node : doc.nodes)
        j["nodes"].push_back({{"id", node.id}, {"mass", mass_spec_to_json(node.mass)}});
    j["edges"] = ordered_json::array();
    for (const auto& edge : doc.edges) {
        ordered_json je = {{"from", edge.from}, {"to", edge.to}};
        if (!edge.directed) je["directed"] = false;
        je["mass"] = mass_spec_to_json(edge.mass);
        j["edges"].push_back(std::move(je));
    }
    j["messages"] = ordered_json::array();
    for (const auto& msg : doc.messages)
        j["messages"].push_back({{"id", msg.id},
                                 {"from", msg.from},
                                 {"to", msg.to},
                                 {"mass", mass_spec_to_json(msg.mass)}});
    return j;
}

ordered_json report_to_json(const FusionReport& report) {
    ordered_json j;
    j["version"] = kFormatVersion;
    j["target"] = report.target;
    j["options"] = {{"gamma_strategy", to_string(report.options.gamma_strategy)},
                    {"rule", to_string(report.options.rule)}};
    j["sources"] = ordered_json::array();
    for (const auto& source : report.sources)
        j["sources"].push_back({{"message", source.message_id},
                                {"sender", source.sender_id},
                                {"network_mass", mass_to_json(source.network_mass)},
                                {"gamma_mass", mass_to_json(source.gamma_mass)},
                                {"fused_mass", mass_to_json(source.fused_mass)}});
    j["global_mass"] = mass_to_json(report.global_mass);
    j["conflict"] = report.conflict;
    ordered_json betp = ordered_json::object();
    const auto& frame = report.decision.betp.frame();
    for (std::size_t i = 0; i < frame->size(); ++i)
        betp[frame->label(i)] = report.decision.betp.prob(i);
    j["betp"] = std::move(betp);
    j["decision"] = report.decision.label;
    j["ambiguous"] = report.decision.ambiguous;
    return j;
}

GraphDocument default_skeleton() {
    GraphDocument doc;
    doc.version = kFormatVersion;
    doc.node_labels = {"Person", "Company", "Association", "Place"};
    doc.link_labels = {"Friendly", "Family", "Prof."};
    doc.message_labels = {"PC", "PNC", "IC", "INC"};
    doc.gamma[{"Person", "Friendly"}] = {"PNC"};
    doc.gamma[{"Person", "Family"}] = {"PNC", "INC"};
    doc.gamma[{"Person", "Prof."}] = {"PNC", "IC"};
    doc.gamma[{"Company", "Friendly"}] = {"PC", "IC"};
    doc.gamma[{"Company", "Family"}] = {"PC", "IC"};
    doc.gamma[{"Company", "Prof."}] = {"IC"};
    doc.gamma[{"Association", "Friendly"}] = {"PNC", "INC"};
    doc.gamma[{"Association", "Family"}] = {"PNC", "INC"};
    doc.gamma[{"Association", "Prof."}] = {"IC"};
    doc.gamma[{"Place", "Friendly"}] = {"IC", "INC"};
    doc.gamma[{"Place", "Family"}] = {"IC", "INC"};
    doc.gamma[{"Place", "Prof."}] = {"IC"};
    return doc;
}

GraphDocument random_graph_document(std::size_t node_count, double density, std::uint32_t seed) {
    if (node_count == 0) throw Error("graph generation: need at least one node");
    if (density < 0.0 || density > 1.0) throw Error("graph generation: density must be in [0, 1]");

    GraphDocument doc = default_skeleton();
    const FramePtr nodes_frame = Frame::make(doc.node_labels, "nodes");
    const FramePtr links_frame = Frame::make(doc.link_labels, "links");
    const FramePtr messages_frame = Frame::make(doc.message_labels, "messages");

    std::mt19937 rng(seed);
    auto draw_mass = [&rng](const FramePtr& frame) {
        return spec_from_mass(random_bba(frame, rng, 1 + rand_below(rng, 3)));
    };

    for (std::size_t i = 1; i <= node_count; ++i)
        doc.nodes.push_back({"n" + std::to_string(i), draw_mass(nodes_frame)});
    for (std::size_t i = 1; i <= node_count; ++i) {
        for (std::size_t k = 1; k <= node_count; ++k) {
            if (i == k || rand_unit(rng) >= density) continue;
            doc.edges.push_back({"n" + std::to_string(i), "n" + std::to_string(k), true,
                                 draw_mass(links_frame)});
        }
    }
    std::size_t next_message = 1;
    for (const auto& edge : doc.edges) {
        if (rand_unit(rng) >= 0.5) continue;
        doc.messages.push_back({"m" + std::to_string(next_message++), edge.from, edge.to,
                                draw_mass(messages_frame)});
    }
    return doc;
}

MassFunction mass_from_json(const json& j, bool allow_conflict) {
    if (!j.is_object() || !j.contains("frame") || !j.contains("mass"))
        throw Error("mass input: expected an object with 'frame' and 'mass'");
    std::vector<Diagnostic> diags;
    std::vector<std::string> labels;
    if (!read_labels(j["frame"], "frame", labels, diags))
        throw Error("mass input: 'frame' must be an array of labels");
    const FramePtr frame = Frame::make(labels);
    MassSpec spec;
    if (!read_mass_spec(j["mass"], "mass", spec, diags)) {
        std::ostringstream msg;
        msg << "mass input: " << diags.front();
        throw Error(msg.str());
    }
    if (spec.vacuous) return MassFunction::vacuous(frame);
    std::vector<MassFunction::Assignment> assignments;
    for (const auto& entry : spec.entries)
        assignments.emplace_back(FocalSet::from_labels(frame, entry.focal), entry.value);
    return allow_conflict ? MassFunction::make_open(frame, assignments)
                          : MassFunction::make(frame, assignments);
}

} // namespace beliefnet
