#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace beliefnet {

class Frame;
using FramePtr = std::shared_ptr<const Frame>;

/// A finite, ordered frame of discernment. Elements are addressed by index;
/// subsets of a frame fit in a 32-bit mask (atomic frames hold at most 16
/// elements, product frames at most 24).
///
/// A product frame's elements are ordered pairs of constituent elements,
/// ordered lexicographically by (index in left, index in right). Frames are
/// immutable and shared through FramePtr.
class Frame {
public:
    static constexpr std::size_t kMaxAtomicElements = 16;
    static constexpr std::size_t kMaxProductElements = 24;

    /// Atomic frame from distinct, non-empty labels. An empty id defaults to
    /// the labels joined with '|'.
    static FramePtr make(std::vector<std::string> labels, std::string id = "");

    /// Cartesian product of two frames. Element (i, j) of the product sits at
    /// index i * |right| + j and is labeled "<left label>,<right label>".
    static FramePtr product(FramePtr left, FramePtr right, std::string id = "");

    const std::string& id() const { return id_; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t element) const { return labels_[element]; }

    /// Index of a label; throws Error if absent.
    std::size_t index_of(std::string_view label) const;
    /// Index of a label, or nullopt. For validators that report rather than throw.
    std::optional<std::size_t> find(std::string_view label) const;

    bool is_product() const { return !constituents_.empty(); }
    const std::vector<FramePtr>& constituents() const { return constituents_; }
    /// Position of `f` in constituents(), matched by Frame::same.
    std::optional<std::size_t> constituent_index(const Frame& f) const;

    /// Coordinate of a product element in the k-th constituent.
    std::size_t coordinate(std::size_t element, std::size_t k) const;

    /// Mask with one bit per element set.
    std::uint32_t full_bits() const { return (size() == 32) ? ~0u : ((1u << size()) - 1u); }

    /// Structural identity: same id and same ordered labels.
    static bool same(const Frame& a, const Frame& b);
    static bool same(const FramePtr& a, const FramePtr& b) { return same(*a, *b); }

private:
    Frame(std::string id, std::vector<std::string> labels, std::vector<FramePtr> constituents);

    std::string id_;
    std::vector<std::string> labels_;
    std::vector<FramePtr> constituents_; // empty for atomic frames
};

} // namespace beliefnet
