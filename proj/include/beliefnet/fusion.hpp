#pragma once

#include <span>
#include <string>
#include <vector>

#include "beliefnet/graph.hpp"
#include "beliefnet/mass_function.hpp"
#include "beliefnet/multi_valued_mapping.hpp"

namespace beliefnet {

/// Which combination rule closes each fusion step. The default mixes them:
/// Dempster for the node⊕edge network belief, unnormalized conjunctive for
/// the message and cross-source steps (conflict stays visible until the
/// decision).
enum class RuleMix {
    Default,     // Dempster on the network step, conjunctive afterwards
    Conjunctive, // conjunctive everywhere
    Dempster,    // Dempster everywhere
};

struct FusionOptions {
    TransportStrategy gamma_strategy = TransportStrategy::Ignorance;
    RuleMix rule = RuleMix::Default;
};

/// Pignistic decision: the distribution, its argmax label, and whether the
/// top two probabilities are indistinguishable (within 1e-9). Ties resolve to
/// the first label in frame order.
struct Decision {
    PignisticDistribution betp;
    std::string label;
    bool ambiguous = false;
};

/// Everything one incoming message contributed: the sender/link belief on the
/// product frame, its passage onto the message frame, and the fusion with the
/// message's own mass.
struct SourceTrace {
    std::string message_id;
    std::string sender_id;
    MassFunction network_mass; // over node × link
    MassFunction gamma_mass;   // over the message frame
    MassFunction fused_mass;   // over the message frame
};

/// Full trace of a fusion run at one node: per-source intermediates, the
/// cross-source global mass, its conflict, and the decision.
struct FusionReport {
    std::string target;
    FusionOptions options;
    std::vector<SourceTrace> sources;
    MassFunction global_mass;
    double conflict; // global_mass(∅)
    Decision decision;
};

/// Belief carried by the network itself: both masses vacuously extended onto
/// the product frame, then Dempster-combined. Extensions over disjoint
/// dimensions cannot conflict; a non-zero conflict here throws.
MassFunction network_belief(const MassFunction& node_mass, const MassFunction& edge_mass,
                            const FramePtr& product);

/// Carries the network belief from the product frame onto the message frame
/// through the passage table.
MassFunction gamma_passage(const MassFunction& network_mass, const GammaTable& gamma,
                           TransportStrategy strategy);

/// Fuses one message's own mass with the network's view of it. Conjunctive by
/// default; conflict is retained.
MassFunction message_fusion(const MassFunction& message_mass, const MassFunction& gamma_mass,
                            RuleMix rule = RuleMix::Default);

/// Folds the per-message results into the global mass, in the given order.
/// Conjunctive by default, so the fold is order-independent.
MassFunction global_fusion(std::span<const MassFunction> per_message, RuleMix rule = RuleMix::Default);

/// Decision on a message-frame mass via the pignistic transform.
Decision decide(const MassFunction& m);

/// The whole pipeline at one node: for every message addressed to `target`
/// (in message-id order), network belief → gamma passage → message fusion;
/// then the global fold and the pignistic decision. Requires at least one
/// incoming message.
FusionReport fuse_at_node(const EvidentialGraph& graph, const std::string& target,
                          const FusionOptions& options = {});

} // namespace beliefnet
