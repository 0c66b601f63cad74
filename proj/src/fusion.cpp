#include "beliefnet/fusion.hpp"

#include <algorithm>

#include "beliefnet/error.hpp"

namespace beliefnet {

namespace {
constexpr double kTieTolerance = 1e-9;
} // namespace

MassFunction network_belief(const MassFunction& node_mass, const MassFunction& edge_mass,
                            const FramePtr& product) {
    const MassFunction extended_node = vacuous_extend(node_mass, product);
    const MassFunction extended_edge = vacuous_extend(edge_mass, product);
    const MassFunction combined = conjunctive_combine(extended_node, extended_edge);
    // Cylinders over distinct constituents always intersect, so a normal node
    // mass and a normal edge mass cannot conflict here.
    if (combined.conflict() != 0.0)
        throw Error("network belief: unexpected conflict of " +
                    std::to_string(combined.conflict()));
    return combined;
}

MassFunction gamma_passage(const MassFunction& network_mass, const GammaTable& gamma,
                           TransportStrategy strategy) {
    return mv_transport(network_mass, gamma.mapping(), strategy);
}

MassFunction message_fusion(const MassFunction& message_mass, const MassFunction& gamma_mass,
                            RuleMix rule) {
    if (rule == RuleMix::Dempster) return dempster_combine(message_mass, gamma_mass);
    return conjunctive_combine(message_mass, gamma_mass);
}

MassFunction global_fusion(std::span<const MassFunction> per_message, RuleMix rule) {
    if (per_message.empty()) throw Error("global fusion: no per-message masses");
    MassFunction global = per_message.front();
    for (std::size_t i = 1; i < per_message.size(); ++i) {
        global = (rule == RuleMix::Dempster) ? dempster_combine(global, per_message[i])
                                             : conjunctive_combine(global, per_message[i]);
    }
    return global;
}

Decision decide(const MassFunction& m) {
    PignisticDistribution betp = pignistic(m);
    const auto& probs = betp.probs();
    std::size_t best = 0;
    for (std::size_t i = 1; i < probs.size(); ++i)
        if (probs[i] > probs[best]) best = i; // strict, so ties keep the first label

    double second = -1.0;
    for (std::size_t i = 0; i < probs.size(); ++i)
        if (i != best) second = std::max(second, probs[i]);
    const bool ambiguous = probs.size() > 1 && probs[best] - second < kTieTolerance;

    std::string label = m.frame()->label(best);
    return Decision{std::move(betp), std::move(label), ambiguous};
}

FusionReport fuse_at_node(const EvidentialGraph& graph, const std::string& target,
                          const FusionOptions& options) {
    if (!graph.has_node(target)) throw Error("fusion: unknown target node '" + target + "'");
    const std::vector<const Message*> incoming = graph.messages_to(target);
    if (incoming.empty()) throw Error("fusion: no messages addressed to '" + target + "'");

    std::vector<SourceTrace> sources;
    std::vector<MassFunction> fused;
    sources.reserve(incoming.size());
    fused.reserve(incoming.size());
    for (const Message* msg : incoming) {
        const BeliefNode& sender = graph.node(msg->from);
        const BeliefEdge& link = graph.edge(msg->from, msg->to);
        MassFunction network = network_belief(sender.mass, link.mass, graph.product_frame());
        MassFunction carried = gamma_passage(network, graph.gamma(), options.gamma_strategy);
        MassFunction combined = message_fusion(msg->mass, carried, options.rule);
        fused.push_back(combined);
        sources.push_back(SourceTrace{msg->id, msg->from, std::move(network), std::move(carried),
                                      std::move(combined)});
    }
    MassFunction global = global_fusion(fused, options.rule);
    const double conflict = global.conflict();
    Decision decision = decide(global);
    return FusionReport{target, options, std::move(sources), std::move(global), conflict,
                        std::move(decision)};
}

} // namespace beliefnet
