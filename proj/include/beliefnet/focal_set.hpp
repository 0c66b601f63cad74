#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "beliefnet/frame.hpp"

namespace beliefnet {

/// A subset of a frame's elements, stored as a bitmask over the frame's
/// element order. The empty set is representable (combination rules produce
/// it) but is rejected as an input focal set of a user-supplied mass function.
class FocalSet {
public:
    FocalSet(FramePtr frame, std::uint32_t bits);

    static FocalSet empty_set(FramePtr frame) { return FocalSet(std::move(frame), 0u); }
    static FocalSet full_set(FramePtr frame);
    static FocalSet singleton(FramePtr frame, std::size_t element);
    static FocalSet from_labels(const FramePtr& frame, std::span<const std::string> labels);
    static FocalSet from_labels(const FramePtr& frame, std::initializer_list<const char*> labels);

    std::uint32_t bits() const { return bits_; }
    std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool empty() const { return bits_ == 0; }
    bool is_full() const { return bits_ == frame_->full_bits(); }
    bool contains(std::size_t element) const { return (bits_ >> element) & 1u; }

    FocalSet intersect(const FocalSet& other) const;
    FocalSet unite(const FocalSet& other) const;
    bool subset_of(const FocalSet& other) const;

    const FramePtr& frame() const { return frame_; }
    /// Member labels in frame element order.
    std::vector<std::string> labels() const;

    friend bool operator==(const FocalSet& a, const FocalSet& b) {
        return a.bits_ == b.bits_ && Frame::same(a.frame_, b.frame_);
    }

private:
    FramePtr frame_;
    std::uint32_t bits_;
};

/// Prints "{Person,Company}" style, in frame element order.
std::ostream& operator<<(std::ostream& os, const FocalSet& fs);

} // namespace beliefnet
