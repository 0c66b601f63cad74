#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "beliefnet/frame.hpp"
#include "beliefnet/mass_function.hpp"
#include "beliefnet/multi_valued_mapping.hpp"

namespace beliefnet {

/// Stable machine-readable codes for graph and document violations.
enum class DiagnosticCode {
    BadSum,          // masses do not sum to 1
    UnknownLabel,    // label not in the declared frame
    MissingGammaCell, // gamma table lacks a (node label, link label) cell
    DanglingEdge,    // edge endpoint or message edge missing
    EmptyFocal,      // empty focal set in an input assignment
    DuplicateId,     // node/edge/message declared twice
    BadMass,         // non-positive or non-finite mass value
    BadVersion,      // unsupported document format version
    BadStructure,    // document shape violation (missing field, wrong type)
    ParseError,      // unreadable file or malformed JSON
};

const char* to_string(DiagnosticCode code);

/// One violation: a stable code, the location (node id, edge, cell...), and
/// a human-readable detail line.
struct Diagnostic {
    DiagnosticCode code;
    std::string where;
    std::string detail;
};

std::ostream& operator<<(std::ostream& os, const Diagnostic& d);

struct BeliefNode {
    std::string id;
    MassFunction mass; // over the node frame
};

struct BeliefEdge {
    std::string from;
    std::string to;
    MassFunction mass; // over the link frame
};

struct Message {
    std::string id;
    std::string from;
    std::string to;
    MassFunction mass; // over the message frame
};

/// The passage table: for every (node label, link label) pair, a non-empty
/// subset of the message frame. Backs the multi-valued mapping from the
/// node×link product frame to the message frame.
class GammaTable {
public:
    /// `cells` holds one image per (node label, link label) pair; construction
    /// requires exactly full coverage. The product frame is built here and
    /// shared with the graph.
    GammaTable(FramePtr node_frame, FramePtr link_frame, FramePtr message_frame,
               const std::map<std::pair<std::string, std::string>, FocalSet>& cells);

    const FramePtr& node_frame() const { return node_frame_; }
    const FramePtr& link_frame() const { return link_frame_; }
    const FramePtr& message_frame() const { return message_frame_; }
    const FramePtr& product_frame() const { return mapping_.source(); }

    const FocalSet& cell(std::string_view node_label, std::string_view link_label) const;
    const MultiValuedMapping& mapping() const { return mapping_; }

private:
    FramePtr node_frame_;
    FramePtr link_frame_;
    FramePtr message_frame_;
    MultiValuedMapping mapping_; // over node_frame × link_frame
};

/// A social graph whose nodes, directed edges, and attached messages each
/// carry a mass function over their own frame, plus the passage table tying
/// the node and link frames to the message frame.
///
/// Construction is single-writer; mutators enforce referential integrity and
/// frame agreement eagerly, so a built graph always validates clean.
class EvidentialGraph {
public:
    explicit EvidentialGraph(GammaTable gamma);

    const FramePtr& node_frame() const { return gamma_.node_frame(); }
    const FramePtr& link_frame() const { return gamma_.link_frame(); }
    const FramePtr& message_frame() const { return gamma_.message_frame(); }
    const FramePtr& product_frame() const { return gamma_.product_frame(); }
    const GammaTable& gamma() const { return gamma_; }

    void add_node(const std::string& id, MassFunction mass);
    void add_edge(const std::string& from, const std::string& to, MassFunction mass);
    void attach_message(const std::string& id, const std::string& from, const std::string& to,
                        MassFunction mass);

    bool has_node(const std::string& id) const { return nodes_.count(id) > 0; }
    bool has_edge(const std::string& from, const std::string& to) const;
    const BeliefNode& node(const std::string& id) const;
    const BeliefEdge& edge(const std::string& from, const std::string& to) const;

    const std::map<std::string, BeliefNode>& nodes() const { return nodes_; }
    const std::map<std::pair<std::string, std::string>, BeliefEdge>& edges() const { return edges_; }
    const std::map<std::string, Message>& messages() const { return messages_; }

    /// Messages addressed to `target`, ordered by message id.
    std::vector<const Message*> messages_to(const std::string& target) const;

    /// Re-checks every structural invariant and returns one diagnostic per
    /// violation. Empty after any sequence of successful mutations.
    std::vector<Diagnostic> validate() const;

private:
    GammaTable gamma_;
    std::map<std::string, BeliefNode> nodes_;
    std::map<std::pair<std::string, std::string>, BeliefEdge> edges_;
    std::map<std::string, Message> messages_; // keyed by message id
};

} // namespace beliefnet
