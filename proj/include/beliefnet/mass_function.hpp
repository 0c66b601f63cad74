#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "beliefnet/focal_set.hpp"
#include "beliefnet/frame.hpp"

namespace beliefnet {

/// Pignistic probability distribution over a frame's elements.
/// Probabilities are non-negative and sum to 1 within 1e-9.
class PignisticDistribution {
public:
    PignisticDistribution(FramePtr frame, std::vector<double> probs);

    const FramePtr& frame() const { return frame_; }
    const std::vector<double>& probs() const { return probs_; }
    double prob(std::size_t element) const { return probs_[element]; }
    double prob(std::string_view label) const;

private:
    FramePtr frame_;
    std::vector<double> probs_;
};

/// A basic belief assignment: a sparse map from focal sets to masses over one
/// frame. Stored masses are strictly positive and sum to 1 within 1e-9, the
/// empty set's mass included. User-constructed assignments are normal
/// (no mass on the empty set); combination outputs may carry conflict mass.
///
/// Focal sets are keyed by their bitmask, so iteration order is deterministic
/// (ascending subset rank).
class MassFunction {
public:
    using Assignment = std::pair<FocalSet, double>;

    /// Normal user-supplied assignment: focal sets non-empty and on `frame`,
    /// masses strictly positive, total within 1e-9 of 1. Masses on the same
    /// focal set accumulate.
    static MassFunction make(const FramePtr& frame, const std::vector<Assignment>& assignments);

    /// Same checks as make() but admits the empty set, for masses that came
    /// out of an unnormalized combination.
    static MassFunction make_open(const FramePtr& frame, const std::vector<Assignment>& assignments);

    /// Total ignorance: all mass on the full frame.
    static MassFunction vacuous(FramePtr frame);

    /// Assignment keyed by bitmask. Total must be within 1e-9 of 1;
    /// non-positive entries are dropped. Used by the combination rules and
    /// frame transports, which maintain normalization by construction.
    static MassFunction from_bit_masses(FramePtr frame, std::map<std::uint32_t, double> masses);

    const FramePtr& frame() const { return frame_; }
    const std::map<std::uint32_t, double>& focals() const { return focals_; }
    std::size_t focal_count() const { return focals_.size(); }

    double mass(const FocalSet& fs) const;
    double mass_bits(std::uint32_t bits) const;
    /// Mass on the empty set.
    double conflict() const { return mass_bits(0u); }
    bool is_vacuous() const;

    friend bool operator==(const MassFunction& a, const MassFunction& b) {
        return Frame::same(a.frame_, b.frame_) && a.focals_ == b.focals_;
    }

private:
    MassFunction(FramePtr frame, std::map<std::uint32_t, double> focals)
        : frame_(std::move(frame)), focals_(std::move(focals)) {}

    FramePtr frame_;
    std::map<std::uint32_t, double> focals_;
};

/// Unnormalized conjunctive rule: m(A) = sum over B∩C=A of m1(B)·m2(C).
/// Conflict between the operands lands on the empty set.
MassFunction conjunctive_combine(const MassFunction& m1, const MassFunction& m2);

/// Dempster's rule: conjunctive combination with the empty set's mass removed
/// and the rest rescaled by 1/(1-conflict). Throws on total conflict.
MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2);

/// Removes the empty set's mass and rescales, turning an unnormalized
/// combination result into a normal assignment. Throws on total conflict.
MassFunction normalize_conflict(const MassFunction& m);

/// Pignistic transform: each focal set's mass, rescaled by 1/(1-m(∅)), is
/// split equally among its elements. Throws if all mass sits on the empty set.
PignisticDistribution pignistic(const MassFunction& m);

/// Lifts a mass function onto a product frame containing its frame as a
/// constituent: each focal set A becomes the cylinder A × (other frames).
MassFunction vacuous_extend(const MassFunction& m, const FramePtr& product);

/// Projects a mass function on a product frame down to one constituent;
/// focal sets with equal projections accumulate.
MassFunction marginalize(const MassFunction& m, const FramePtr& target);

/// Largest per-focal-set mass difference between two assignments on the same
/// frame. Test and diagnostics helper.
double max_mass_difference(const MassFunction& a, const MassFunction& b);

/// Prints "{Person}:0.75 {..}:0.25" style.
std::ostream& operator<<(std::ostream& os, const MassFunction& m);

} // namespace beliefnet
