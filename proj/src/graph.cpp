#include "beliefnet/graph.hpp"

#include <cmath>
#include <ostream>

#include "beliefnet/error.hpp"

namespace beliefnet {

const char* to_string(DiagnosticCode code) {
    switch (code) {
        case DiagnosticCode::BadSum: return "BAD_SUM";
        case DiagnosticCode::UnknownLabel: return "UNKNOWN_LABEL";
        case DiagnosticCode::MissingGammaCell: return "MISSING_GAMMA_CELL";
        case DiagnosticCode::DanglingEdge: return "DANGLING_EDGE";
        case DiagnosticCode::EmptyFocal: return "EMPTY_FOCAL";
        case DiagnosticCode::DuplicateId: return "DUPLICATE_ID";
        case DiagnosticCode::BadMass: return "BAD_MASS";
        case DiagnosticCode::BadVersion: return "BAD_VERSION";
        case DiagnosticCode::BadStructure: return "BAD_STRUCTURE";
        case DiagnosticCode::ParseError: return "PARSE_ERROR";
    }
    return "UNKNOWN";
}

std::ostream& operator<<(std::ostream& os, const Diagnostic& d) {
    os << to_string(d.code) << " at " << d.where;
    if (!d.detail.empty()) os << ": " << d.detail;
    return os;
}

namespace {

MultiValuedMapping build_gamma_mapping(
    const FramePtr& node_frame, const FramePtr& link_frame, const FramePtr& message_frame,
    const std::map<std::pair<std::string, std::string>, FocalSet>& cells) {
    const FramePtr product = Frame::product(node_frame, link_frame);
    std::vector<FocalSet> images;
    images.reserve(product->size());
    for (std::size_t n = 0; n < node_frame->size(); ++n) {
        for (std::size_t l = 0; l < link_frame->size(); ++l) {
            auto it = cells.find({node_frame->label(n), link_frame->label(l)});
            if (it == cells.end())
                throw Error("gamma table: missing cell (" + node_frame->label(n) + ", " +
                            link_frame->label(l) + ")");
            if (!Frame::same(it->second.frame(), message_frame))
                throw Error("gamma table: cell (" + node_frame->label(n) + ", " +
                            link_frame->label(l) + ") is not over the message frame");
            images.push_back(it->second);
        }
    }
    if (cells.size() != node_frame->size() * link_frame->size())
        throw Error("gamma table: " + std::to_string(cells.size()) + " cells for a " +
                    std::to_string(node_frame->size() * link_frame->size()) + "-cell table");
    return MultiValuedMapping(product, message_frame, std::move(images));
}

} // namespace

GammaTable::GammaTable(FramePtr node_frame, FramePtr link_frame, FramePtr message_frame,
                       const std::map<std::pair<std::string, std::string>, FocalSet>& cells)
    : node_frame_(std::move(node_frame)),
      link_frame_(std::move(link_frame)),
      message_frame_(std::move(message_frame)),
      mapping_(build_gamma_mapping(node_frame_, link_frame_, message_frame_, cells)) {}

const FocalSet& GammaTable::cell(std::string_view node_label, std::string_view link_label) const {
    const std::size_t n = node_frame_->index_of(node_label);
    const std::size_t l = link_frame_->index_of(link_label);
    return mapping_.image(n * link_frame_->size() + l);
}

EvidentialGraph::EvidentialGraph(GammaTable gamma) : gamma_(std::move(gamma)) {}

void EvidentialGraph::add_node(const std::string& id, MassFunction mass) {
    if (id.empty()) throw Error("graph: node id must be non-empty");
    if (nodes_.count(id)) throw Error("graph: duplicate node id '" + id + "'");
    if (!Frame::same(mass.frame(), node_frame()))
        throw Error("graph: node '" + id + "' mass is over '" + mass.frame()->id() +
                    "', expected the node frame");
    if (mass.conflict() > 0.0) throw Error("graph: node '" + id + "' mass is not normal");
    nodes_.emplace(id, BeliefNode{id, std::move(mass)});
}

void EvidentialGraph::add_edge(const std::string& from, const std::string& to, MassFunction mass) {
    if (!nodes_.count(from)) throw Error("graph: edge endpoint '" + from + "' is unknown");
    if (!nodes_.count(to)) throw Error("graph: edge endpoint '" + to + "' is unknown");
    if (edges_.count({from, to})) throw Error("graph: duplicate edge " + from + "->" + to);
    if (!Frame::same(mass.frame(), link_frame()))
        throw Error("graph: edge " + from + "->" + to + " mass is over '" + mass.frame()->id() +
                    "', expected the link frame");
    if (mass.conflict() > 0.0) throw Error("graph: edge " + from + "->" + to + " mass is not normal");
    edges_.emplace(std::make_pair(from, to), BeliefEdge{from, to, std::move(mass)});
}

void EvidentialGraph::attach_message(const std::string& id, const std::string& from,
                                     const std::string& to, MassFunction mass) {
    if (id.empty()) throw Error("graph: message id must be non-empty");
    if (messages_.count(id)) throw Error("graph: duplicate message id '" + id + "'");
    if (!edges_.count({from, to}))
        throw Error("graph: message '" + id + "' has no edge " + from + "->" + to);
    if (!Frame::same(mass.frame(), message_frame()))
        throw Error("graph: message '" + id + "' mass is over '" + mass.frame()->id() +
                    "', expected the message frame");
    if (mass.conflict() > 0.0) throw Error("graph: message '" + id + "' mass is not normal");
    messages_.emplace(id, Message{id, from, to, std::move(mass)});
}

bool EvidentialGraph::has_edge(const std::string& from, const std::string& to) const {
    return edges_.count({from, to}) > 0;
}

const BeliefNode& EvidentialGraph::node(const std::string& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw Error("graph: unknown node '" + id + "'");
    return it->second;
}

const BeliefEdge& EvidentialGraph::edge(const std::string& from, const std::string& to) const {
    auto it = edges_.find({from, to});
    if (it == edges_.end()) throw Error("graph: unknown edge " + from + "->" + to);
    return it->second;
}

std::vector<const Message*> EvidentialGraph::messages_to(const std::string& target) const {
    std::vector<const Message*> out;
    for (const auto& [id, msg] : messages_) // map order = id order
        if (msg.to == target) out.push_back(&msg);
    return out;
}

std::vector<Diagnostic> EvidentialGraph::validate() const {
    std::vector<Diagnostic> out;
    auto check_mass = [&out](const MassFunction& mass, const FramePtr& frame,
                             const std::string& where) {
        if (!Frame::same(mass.frame(), frame))
            out.push_back({DiagnosticCode::UnknownLabel, where, "mass is over frame '" +
                           mass.frame()->id() + "', expected '" + frame->id() + "'"});
        double sum = 0.0;
        for (const auto& [bits, w] : mass.focals()) {
            sum += w;
            if (bits == 0) out.push_back({DiagnosticCode::EmptyFocal, where, "mass on the empty set"});
        }
        if (std::abs(sum - 1.0) > 1e-9)
            out.push_back({DiagnosticCode::BadSum, where,
                           "masses sum to " + std::to_string(sum)});
    };
    for (const auto& [id, node] : nodes_) check_mass(node.mass, node_frame(), "node " + id);
    for (const auto& [key, edge] : edges_) {
        const std::string where = "edge " + key.first + "->" + key.second;
        if (!nodes_.count(key.first) || !nodes_.count(key.second))
            out.push_back({DiagnosticCode::DanglingEdge, where, "endpoint not in the graph"});
        check_mass(edge.mass, link_frame(), where);
    }
    for (const auto& [id, msg] : messages_) {
        const std::string where = "message " + id;
        if (!edges_.count({msg.from, msg.to}))
            out.push_back({DiagnosticCode::DanglingEdge, where,
                           "no edge " + msg.from + "->" + msg.to});
        check_mass(msg.mass, message_frame(), where);
    }
    // The gamma mapping is total by construction; re-check image sanity.
    for (std::size_t e = 0; e < product_frame()->size(); ++e)
        if (gamma_.mapping().image(e).empty())
            out.push_back({DiagnosticCode::MissingGammaCell, "gamma(" + product_frame()->label(e) + ")",
                           "empty image"});
    return out;
}

} // namespace beliefnet
