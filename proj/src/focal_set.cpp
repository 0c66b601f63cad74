#include "beliefnet/focal_set.hpp"

#include <ostream>

#include "beliefnet/error.hpp"

namespace beliefnet {

FocalSet::FocalSet(FramePtr frame, std::uint32_t bits) : frame_(std::move(frame)), bits_(bits) {
    if (bits_ & ~frame_->full_bits())
        throw Error("focal set: membership bits beyond the frame's " +
                    std::to_string(frame_->size()) + " elements");
}

FocalSet FocalSet::full_set(FramePtr frame) {
    const std::uint32_t bits = frame->full_bits();
    return FocalSet(std::move(frame), bits);
}

FocalSet FocalSet::singleton(FramePtr frame, std::size_t element) {
    if (element >= frame->size()) throw Error("focal set: element index out of range");
    return FocalSet(std::move(frame), 1u << element);
}

FocalSet FocalSet::from_labels(const FramePtr& frame, std::span<const std::string> labels) {
    std::uint32_t bits = 0;
    for (const auto& l : labels) bits |= 1u << frame->index_of(l);
    return FocalSet(frame, bits);
}

FocalSet FocalSet::from_labels(const FramePtr& frame, std::initializer_list<const char*> labels) {
    std::uint32_t bits = 0;
    for (const char* l : labels) bits |= 1u << frame->index_of(l);
    return FocalSet(frame, bits);
}

namespace {
void require_same_frame(const FocalSet& a, const FocalSet& b) {
    if (!Frame::same(a.frame(), b.frame()))
        throw Error("focal set: frame mismatch ('" + a.frame()->id() + "' vs '" +
                    b.frame()->id() + "')");
}
} // namespace

FocalSet FocalSet::intersect(const FocalSet& other) const {
    require_same_frame(*this, other);
    return FocalSet(frame_, bits_ & other.bits_);
}

FocalSet FocalSet::unite(const FocalSet& other) const {
    require_same_frame(*this, other);
    return FocalSet(frame_, bits_ | other.bits_);
}

bool FocalSet::subset_of(const FocalSet& other) const {
    require_same_frame(*this, other);
    return (bits_ & other.bits_) == bits_;
}

std::vector<std::string> FocalSet::labels() const {
    std::vector<std::string> out;
    out.reserve(size());
    for (std::size_t i = 0; i < frame_->size(); ++i)
        if (contains(i)) out.push_back(frame_->label(i));
    return out;
}

std::ostream& operator<<(std::ostream& os, const FocalSet& fs) {
    os << '{';
    bool first = true;
    for (std::size_t i = 0; i < fs.frame()->size(); ++i) {
        if (!fs.contains(i)) continue;
        if (!first) os << ',';
        os << fs.frame()->label(i);
        first = false;
    }
    return os << '}';
}

} // namespace beliefnet
