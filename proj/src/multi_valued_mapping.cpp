#include "beliefnet/multi_valued_mapping.hpp"

#include <bit>

#include "beliefnet/error.hpp"

namespace beliefnet {

MultiValuedMapping::MultiValuedMapping(FramePtr source, FramePtr target,
                                       std::vector<FocalSet> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->size())
        throw Error("mapping: one image per source element expected, got " +
                    std::to_string(images_.size()) + " for " + std::to_string(source_->size()));
    for (std::size_t e = 0; e < images_.size(); ++e) {
        if (!Frame::same(images_[e].frame(), target_))
            throw Error("mapping: image of '" + source_->label(e) + "' is not over the target frame");
        if (images_[e].empty())
            throw Error("mapping: image of '" + source_->label(e) + "' is empty");
    }
}

MultiValuedMapping MultiValuedMapping::identity(const FramePtr& frame) {
    std::vector<FocalSet> images;
    images.reserve(frame->size());
    for (std::size_t e = 0; e < frame->size(); ++e) images.push_back(FocalSet::singleton(frame, e));
    return MultiValuedMapping(frame, frame, std::move(images));
}

MassFunction mv_transport(const MassFunction& m, const MultiValuedMapping& mapping,
                          TransportStrategy strategy) {
    if (!Frame::same(m.frame(), mapping.source()))
        throw Error("mapping transport: mass is over '" + m.frame()->id() + "', mapping expects '" +
                    mapping.source()->id() + "'");
    const std::uint32_t full = mapping.target()->full_bits();
    std::map<std::uint32_t, double> out;
    for (const auto& [bits, w] : m.focals()) {
        std::uint32_t image;
        if (bits == 0) {
            image = 0; // conflict mass stays conflict mass
        } else if (std::has_single_bit(bits)) {
            image = mapping.image(static_cast<std::size_t>(std::countr_zero(bits))).bits();
        } else if (strategy == TransportStrategy::Ignorance) {
            image = full;
        } else {
            image = 0;
            for (std::size_t e = 0; e < mapping.source()->size(); ++e)
                if ((bits >> e) & 1u) image |= mapping.image(e).bits();
        }
        out[image] += w;
    }
    return MassFunction::from_bit_masses(mapping.target(), std::move(out));
}

MassFunction coarsen(const MassFunction& m, const MultiValuedMapping& partition) {
    std::uint32_t covered = 0;
    for (const auto& image : partition.images()) {
        if (image.size() != 1)
            throw Error("coarsening: images must be singletons, got " +
                        std::to_string(image.size()) + " elements");
        covered |= image.bits();
    }
    if (covered != partition.target()->full_bits())
        throw Error("coarsening: images do not cover the coarse frame");
    return mv_transport(m, partition, TransportStrategy::Union);
}

} // namespace beliefnet
