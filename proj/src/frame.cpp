#include "beliefnet/frame.hpp"

#include <algorithm>
#include <unordered_set>

#include "beliefnet/error.hpp"

namespace beliefnet {

Frame::Frame(std::string id, std::vector<std::string> labels, std::vector<FramePtr> constituents)
    : id_(std::move(id)), labels_(std::move(labels)), constituents_(std::move(constituents)) {}

namespace {

std::string join_labels(const std::vector<std::string>& labels, char sep) {
    std::string out;
    for (const auto& l : labels) {
        if (!out.empty()) out += sep;
        out += l;
    }
    return out;
}

void check_distinct(const std::vector<std::string>& labels, const char* what) {
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels) {
        if (l.empty()) throw Error(std::string(what) + ": empty label");
        if (!seen.insert(l).second) throw Error(std::string(what) + ": duplicate label '" + l + "'");
    }
}

} // namespace

FramePtr Frame::make(std::vector<std::string> labels, std::string id) {
    if (labels.empty()) throw Error("frame: needs at least one label");
    if (labels.size() > kMaxAtomicElements)
        throw Error("frame: " + std::to_string(labels.size()) + " elements exceeds the cap of " +
                    std::to_string(kMaxAtomicElements));
    check_distinct(labels, "frame");
    if (id.empty()) id = join_labels(labels, '|');
    return FramePtr(new Frame(std::move(id), std::move(labels), {}));
}

FramePtr Frame::product(FramePtr left, FramePtr right, std::string id) {
    const std::size_t count = left->size() * right->size();
    if (count > kMaxProductElements)
        throw Error("product frame: " + std::to_string(count) + " elements exceeds the cap of " +
                    std::to_string(kMaxProductElements));
    std::vector<std::string> labels;
    labels.reserve(count);
    for (const auto& a : left->labels())
        for (const auto& b : right->labels())
            labels.push_back(a + "," + b);
    check_distinct(labels, "product frame");
    if (id.empty()) id = "(" + left->id() + ")x(" + right->id() + ")";
    std::vector<FramePtr> constituents{std::move(left), std::move(right)};
    return FramePtr(new Frame(std::move(id), std::move(labels), std::move(constituents)));
}

std::size_t Frame::index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw Error("frame '" + id_ + "': unknown label '" + std::string(label) + "'");
}

std::optional<std::size_t> Frame::find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<std::size_t> Frame::constituent_index(const Frame& f) const {
    for (std::size_t k = 0; k < constituents_.size(); ++k)
        if (same(*constituents_[k], f)) return k;
    return std::nullopt;
}

std::size_t Frame::coordinate(std::size_t element, std::size_t k) const {
    // Mixed radix, first constituent most significant: for a binary product,
    // element = i_left * |right| + i_right.
    std::size_t rest = element;
    for (std::size_t j = constituents_.size(); j-- > 0;) {
        const std::size_t radix = constituents_[j]->size();
        if (j == k) return rest % radix;
        rest /= radix;
    }
    throw Error("frame '" + id_ + "': constituent index out of range");
}

bool Frame::same(const Frame& a, const Frame& b) {
    if (&a == &b) return true;
    return a.id_ == b.id_ && a.labels_ == b.labels_;
}

} // namespace beliefnet
