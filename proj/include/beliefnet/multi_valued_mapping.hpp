#pragma once

#include <vector>

#include "beliefnet/focal_set.hpp"
#include "beliefnet/frame.hpp"
#include "beliefnet/mass_function.hpp"

namespace beliefnet {

/// Element-to-subset correspondence between two frames: every element of the
/// source frame has exactly one non-empty image in the target frame.
class MultiValuedMapping {
public:
    /// One image per source element, in source element order.
    MultiValuedMapping(FramePtr source, FramePtr target, std::vector<FocalSet> images);

    /// Maps every element to its own singleton.
    static MultiValuedMapping identity(const FramePtr& frame);

    const FramePtr& source() const { return source_; }
    const FramePtr& target() const { return target_; }
    const FocalSet& image(std::size_t element) const { return images_[element]; }
    const std::vector<FocalSet>& images() const { return images_; }

private:
    FramePtr source_;
    FramePtr target_;
    std::vector<FocalSet> images_;
};

/// How a mapping carries a non-singleton focal set across frames. The mapping
/// itself is defined element by element; a focal set committed to several
/// elements either degrades to total ignorance on the target frame or goes to
/// the union of its elements' images.
enum class TransportStrategy {
    Ignorance,
    Union,
};

/// Transports a mass function across a mapping. Singleton focal sets hand
/// their mass to the element's image; non-singletons follow `strategy`; an
/// empty focal set stays empty. Masses landing on the same target focal set
/// accumulate, so total mass is preserved.
MassFunction mv_transport(const MassFunction& m, const MultiValuedMapping& mapping,
                          TransportStrategy strategy);

/// Groups a frame's elements into a smaller frame. The mapping must send each
/// fine element to a singleton and cover every coarse element. Equivalent to
/// mv_transport with the Union strategy.
MassFunction coarsen(const MassFunction& m, const MultiValuedMapping& partition);

} // namespace beliefnet
