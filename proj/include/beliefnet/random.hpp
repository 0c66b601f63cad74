#pragma once

#include <cstdint>
#include <random>

#include "beliefnet/frame.hpp"
#include "beliefnet/mass_function.hpp"

namespace beliefnet {

/// Deterministic draws built directly on the mt19937 output stream, so the
/// same seed gives the same sequence on every platform and standard library.
std::uint32_t rand_below(std::mt19937& rng, std::uint32_t n);
double rand_unit(std::mt19937& rng); // in [0, 1)

/// Reproducible random normal mass function: `focal_count` distinct non-empty
/// focal sets with masses from a normalized uniform draw.
/// Requires 1 <= focal_count <= 2^|frame| - 1.
MassFunction random_bba(const FramePtr& frame, std::mt19937& rng, std::size_t focal_count);

/// Single-shot variant: seeds a fresh generator, so identical arguments give
/// an identical mass function.
MassFunction random_bba(const FramePtr& frame, std::uint32_t seed, std::size_t focal_count);

} // namespace beliefnet
