#include "beliefnet/mass_function.hpp"

#include <cmath>
#include <ostream>

#include "beliefnet/error.hpp"

namespace beliefnet {

namespace {

constexpr double kSumTolerance = 1e-9;       // input/output normalization
constexpr double kTotalConflictEps = 1e-12;  // conflict >= 1 - eps counts as total

void require_same_frame(const MassFunction& a, const MassFunction& b, const char* op) {
    if (!Frame::same(a.frame(), b.frame()))
        throw Error(std::string(op) + ": frame mismatch ('" + a.frame()->id() + "' vs '" +
                    b.frame()->id() + "')");
}

std::map<std::uint32_t, double> collect(const FramePtr& frame,
                                        const std::vector<MassFunction::Assignment>& assignments,
                                        bool allow_empty) {
    std::map<std::uint32_t, double> out;
    for (const auto& [focal, value] : assignments) {
        if (!Frame::same(focal.frame(), frame))
            throw Error("mass function: focal set belongs to frame '" + focal.frame()->id() +
                        "', not '" + frame->id() + "'");
        if (focal.empty() && !allow_empty)
            throw Error("mass function: the empty set cannot carry input mass");
        if (!(value > 0.0) || !std::isfinite(value))
            throw Error("mass function: masses must be positive and finite");
        out[focal.bits()] += value;
    }
    return out;
}

} // namespace

PignisticDistribution::PignisticDistribution(FramePtr frame, std::vector<double> probs)
    : frame_(std::move(frame)), probs_(std::move(probs)) {
    if (probs_.size() != frame_->size())
        throw Error("pignistic: one probability per frame element expected");
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0) || !std::isfinite(p)) throw Error("pignistic: probabilities must be >= 0");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw Error("pignistic: probabilities sum to " + std::to_string(sum) + ", expected 1");
}

double PignisticDistribution::prob(std::string_view label) const {
    return probs_[frame_->index_of(label)];
}

MassFunction MassFunction::make(const FramePtr& frame,
                                const std::vector<Assignment>& assignments) {
    return from_bit_masses(frame, collect(frame, assignments, /*allow_empty=*/false));
}

MassFunction MassFunction::make_open(const FramePtr& frame,
                                     const std::vector<Assignment>& assignments) {
    return from_bit_masses(frame, collect(frame, assignments, /*allow_empty=*/true));
}

MassFunction MassFunction::vacuous(FramePtr frame) {
    std::map<std::uint32_t, double> focals{{frame->full_bits(), 1.0}};
    return MassFunction(std::move(frame), std::move(focals));
}

MassFunction MassFunction::from_bit_masses(FramePtr frame, std::map<std::uint32_t, double> masses) {
    const std::uint32_t full = frame->full_bits();
    double sum = 0.0;
    for (auto it = masses.begin(); it != masses.end();) {
        if (it->first & ~full) throw Error("mass function: focal bits beyond the frame");
        if (!std::isfinite(it->second)) throw Error("mass function: non-finite mass");
        if (it->second <= 0.0) {
            it = masses.erase(it); // zero-mass focal sets are dropped eagerly
        } else {
            sum += it->second;
            ++it;
        }
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw Error("mass function: masses sum to " + std::to_string(sum) + ", expected 1");
    return MassFunction(std::move(frame), std::move(masses));
}

double MassFunction::mass(const FocalSet& fs) const {
    if (!Frame::same(fs.frame(), frame_))
        throw Error("mass function: focal set from frame '" + fs.frame()->id() + "'");
    return mass_bits(fs.bits());
}

double MassFunction::mass_bits(std::uint32_t bits) const {
    auto it = focals_.find(bits);
    return it == focals_.end() ? 0.0 : it->second;
}

bool MassFunction::is_vacuous() const {
    return focals_.size() == 1 && focals_.begin()->first == frame_->full_bits();
}

MassFunction conjunctive_combine(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1, m2, "conjunctive combination");
    std::map<std::uint32_t, double> out;
    for (const auto& [b, w1] : m1.focals())
        for (const auto& [c, w2] : m2.focals())
            out[b & c] += w1 * w2;
    return MassFunction::from_bit_masses(m1.frame(), std::move(out));
}

MassFunction normalize_conflict(const MassFunction& m) {
    const double k = m.conflict();
    if (k == 0.0) return m;
    if (k >= 1.0 - kTotalConflictEps)
        throw Error("normalization: total conflict, all mass on the empty set");
    std::map<std::uint32_t, double> out;
    for (const auto& [bits, w] : m.focals())
        if (bits != 0) out[bits] = w / (1.0 - k);
    return MassFunction::from_bit_masses(m.frame(), std::move(out));
}

MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2) {
    require_same_frame(m1, m2, "Dempster combination");
    return normalize_conflict(conjunctive_combine(m1, m2));
}

PignisticDistribution pignistic(const MassFunction& m) {
    const double k = m.conflict();
    if (k >= 1.0 - kTotalConflictEps)
        throw Error("pignistic: all mass on the empty set");
    const FramePtr& frame = m.frame();
    std::vector<double> probs(frame->size(), 0.0);
    for (const auto& [bits, w] : m.focals()) {
        if (bits == 0) continue;
        const double share = w / (static_cast<double>(std::popcount(bits)) * (1.0 - k));
        for (std::size_t i = 0; i < frame->size(); ++i)
            if ((bits >> i) & 1u) probs[i] += share;
    }
    return PignisticDistribution(frame, std::move(probs));
}

MassFunction vacuous_extend(const MassFunction& m, const FramePtr& product) {
    if (!product->is_product())
        throw Error("vacuous extension: target frame '" + product->id() + "' is not a product");
    auto k = product->constituent_index(*m.frame());
    if (!k)
        throw Error("vacuous extension: frame '" + m.frame()->id() +
                    "' is not a constituent of '" + product->id() + "'");
    // Cylinder of each focal set: every product element whose k-th coordinate
    // lies in the focal set.
    std::map<std::uint32_t, double> out;
    for (const auto& [bits, w] : m.focals()) {
        std::uint32_t extended = 0;
        for (std::size_t e = 0; e < product->size(); ++e)
            if ((bits >> product->coordinate(e, *k)) & 1u) extended |= 1u << e;
        out[extended] += w;
    }
    return MassFunction::from_bit_masses(product, std::move(out));
}

MassFunction marginalize(const MassFunction& m, const FramePtr& target) {
    const FramePtr& source = m.frame();
    if (!source->is_product())
        throw Error("marginalization: frame '" + source->id() + "' is not a product");
    auto k = source->constituent_index(*target);
    if (!k)
        throw Error("marginalization: frame '" + target->id() + "' is not a constituent of '" +
                    source->id() + "'");
    std::map<std::uint32_t, double> out;
    for (const auto& [bits, w] : m.focals()) {
        std::uint32_t projected = 0;
        for (std::size_t e = 0; e < source->size(); ++e)
            if ((bits >> e) & 1u) projected |= 1u << source->coordinate(e, *k);
        out[projected] += w;
    }
    return MassFunction::from_bit_masses(target, std::move(out));
}

double max_mass_difference(const MassFunction& a, const MassFunction& b) {
    require_same_frame(a, b, "mass comparison");
    double worst = 0.0;
    for (const auto& [bits, w] : a.focals()) worst = std::max(worst, std::abs(w - b.mass_bits(bits)));
    for (const auto& [bits, w] : b.focals()) worst = std::max(worst, std::abs(w - a.mass_bits(bits)));
    return worst;
}

std::ostream& operator<<(std::ostream& os, const MassFunction& m) {
    bool first = true;
    for (const auto& [bits, w] : m.focals()) {
        if (!first) os << ' ';
        os << FocalSet(m.frame(), bits) << ':' << w;
        first = false;
    }
    return os;
}

} // namespace beliefnet
