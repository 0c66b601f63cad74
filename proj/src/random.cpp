#include "beliefnet/random.hpp"

#include <set>

#include "beliefnet/error.hpp"
#include "beliefnet/focal_set.hpp"

namespace beliefnet {

std::uint32_t rand_below(std::mt19937& rng, std::uint32_t n) {
    // Rejection keeps the draw unbiased without touching the
    // implementation-defined standard distributions.
    const std::uint32_t limit = std::mt19937::max() - std::mt19937::max() % n;
    std::uint32_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

double rand_unit(std::mt19937& rng) {
    return rng() * (1.0 / 4294967296.0); // 2^-32
}

MassFunction random_bba(const FramePtr& frame, std::mt19937& rng, std::size_t focal_count) {
    const std::uint32_t subsets = (1u << frame->size()) - 1u; // non-empty ones
    if (focal_count < 1 || focal_count > subsets)
        throw Error("random mass: focal count must be in [1, " + std::to_string(subsets) + "]");

    std::set<std::uint32_t> chosen;
    while (chosen.size() < focal_count) chosen.insert(1u + rand_below(rng, subsets));

    std::map<std::uint32_t, double> masses;
    double total = 0.0;
    for (std::uint32_t bits : chosen) {
        const double w = rand_unit(rng) + 1e-6; // keep every chosen focal set present
        masses[bits] = w;
        total += w;
    }
    for (auto& [bits, w] : masses) w /= total;
    return MassFunction::from_bit_masses(frame, std::move(masses));
}

MassFunction random_bba(const FramePtr& frame, std::uint32_t seed, std::size_t focal_count) {
    std::mt19937 rng(seed);
    return random_bba(frame, rng, focal_count);
}

} // namespace beliefnet
