#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "beliefnet/fusion.hpp"
#include "beliefnet/mass_function.hpp"
#include "beliefnet/multi_valued_mapping.hpp"
#include "beliefnet/random.hpp"
#include "test_util.hpp"

using beliefnet::FramePtr;
using beliefnet::MassFunction;
using beliefnet::TransportStrategy;
using testutil::near;

namespace {

const double kTol = 1e-12;
const int kCases = 200;

FramePtr frame_for_case(int i) {
    switch (i % 4) {
        case 0: return beliefnet::Frame::make({"a", "b"});
        case 1: return beliefnet::Frame::make({"a", "b", "c"});
        case 2: return testutil::message_frame();
        default: return beliefnet::Frame::make({"a", "b", "c", "d", "e"});
    }
}

MassFunction draw(const FramePtr& frame, std::mt19937& rng) {
    const std::size_t max_focals = (std::size_t{1} << frame->size()) - 1;
    const std::size_t count = 1 + beliefnet::rand_below(
                                      rng, static_cast<std::uint32_t>(std::min<std::size_t>(
                                               max_focals, 6)));
    return beliefnet::random_bba(frame, rng, count);
}

double total_mass(const MassFunction& m) {
    double total = 0.0;
    for (const auto& [bits, w] : m.focals()) total += w;
    return total;
}

} // namespace

TEST_CASE("conjunctive combination is commutative") {
    std::mt19937 rng(11);
    for (int i = 0; i < kCases; ++i) {
        const FramePtr frame = frame_for_case(i);
        const MassFunction a = draw(frame, rng);
        const MassFunction b = draw(frame, rng);
        REQUIRE(beliefnet::max_mass_difference(beliefnet::conjunctive_combine(a, b),
                                               beliefnet::conjunctive_combine(b, a)) <= kTol);
    }
}

TEST_CASE("conjunctive combination is associative") {
    std::mt19937 rng(12);
    for (int i = 0; i < kCases; ++i) {
        const FramePtr frame = frame_for_case(i);
        const MassFunction a = draw(frame, rng);
        const MassFunction b = draw(frame, rng);
        const MassFunction c = draw(frame, rng);
        const MassFunction left =
            beliefnet::conjunctive_combine(beliefnet::conjunctive_combine(a, b), c);
        const MassFunction right =
            beliefnet::conjunctive_combine(a, beliefnet::conjunctive_combine(b, c));
        REQUIRE(beliefnet::max_mass_difference(left, right) <= kTol);
    }
}

TEST_CASE("the vacuous mass is neutral for both rules") {
    std::mt19937 rng(13);
    for (int i = 0; i < kCases; ++i) {
        const FramePtr frame = frame_for_case(i);
        const MassFunction a = draw(frame, rng);
        const MassFunction vac = MassFunction::vacuous(frame);
        REQUIRE(beliefnet::max_mass_difference(beliefnet::conjunctive_combine(a, vac), a) <= kTol);
        REQUIRE(beliefnet::max_mass_difference(beliefnet::dempster_combine(a, vac), a) <= kTol);
    }
}

TEST_CASE("Dempster's rule is the normalized conjunctive rule") {
    std::mt19937 rng(14);
    for (int i = 0; i < kCases; ++i) {
        const FramePtr frame = frame_for_case(i);
        const MassFunction a = draw(frame, rng);
        const MassFunction b = draw(frame, rng);
        const MassFunction conj = beliefnet::conjunctive_combine(a, b);
        if (conj.conflict() >= 1.0 - 1e-9) continue; // randomly unreachable
        REQUIRE(beliefnet::max_mass_difference(beliefnet::dempster_combine(a, b),
                                               beliefnet::normalize_conflict(conj)) <= kTol);
    }
}

TEST_CASE("marginalizing a vacuous extension recovers the original") {
    std::mt19937 rng(15);
    const FramePtr other = beliefnet::Frame::make({"x", "y", "z"});
    for (int i = 0; i < kCases; ++i) {
        const FramePtr frame = frame_for_case(i);
        const MassFunction m = draw(frame, rng);
        const FramePtr left_product = beliefnet::Frame::product(frame, other);
        REQUIRE(beliefnet::max_mass_difference(
                    beliefnet::marginalize(beliefnet::vacuous_extend(m, left_product), frame),
                    m) <= kTol);
        const FramePtr right_product = beliefnet::Frame::product(other, frame);
        REQUIRE(beliefnet::max_mass_difference(
                    beliefnet::marginalize(beliefnet::vacuous_extend(m, right_product), frame),
                    m) <= kTol);
    }
}

TEST_CASE("pignistic probabilities are normalized") {
    std::mt19937 rng(16);
    for (int i = 0; i < kCases; ++i) {
        const FramePtr frame = frame_for_case(i);
        // Use a combination output so conflict mass is exercised too.
        const MassFunction m = beliefnet::conjunctive_combine(draw(frame, rng), draw(frame, rng));
        if (m.conflict() >= 1.0 - 1e-9) continue;
        const auto betp = beliefnet::pignistic(m);
        double total = 0.0;
        for (std::size_t e = 0; e < frame->size(); ++e) {
            REQUIRE(betp.prob(e) >= 0.0);
            total += betp.prob(e);
        }
        REQUIRE(near(total, 1.0, kTol));
    }
}

TEST_CASE("pignistic decision is invariant under Dempster normalization") {
    std::mt19937 rng(17);
    for (int i = 0; i < kCases; ++i) {
        const FramePtr frame = frame_for_case(i);
        const MassFunction m = beliefnet::conjunctive_combine(draw(frame, rng), draw(frame, rng));
        if (m.conflict() >= 1.0 - 1e-9) continue;
        const auto raw = beliefnet::pignistic(m);
        const auto normalized = beliefnet::pignistic(beliefnet::normalize_conflict(m));
        for (std::size_t e = 0; e < frame->size(); ++e)
            REQUIRE(near(raw.prob(e), normalized.prob(e), kTol));
        REQUIRE(beliefnet::decide(m).label == beliefnet::decide(beliefnet::normalize_conflict(m)).label);
    }
}

TEST_CASE("gamma passage preserves total mass under both strategies") {
    std::mt19937 rng(18);
    const beliefnet::GammaTable gamma = testutil::social_gamma();
    const FramePtr product = gamma.product_frame();
    for (int i = 0; i < kCases; ++i) {
        const MassFunction m = draw(product, rng);
        for (auto strategy : {TransportStrategy::Ignorance, TransportStrategy::Union}) {
            const MassFunction out = beliefnet::mv_transport(m, gamma.mapping(), strategy);
            REQUIRE(near(total_mass(out), 1.0, kTol));
            REQUIRE(out.conflict() == 0.0); // normal in, normal out
        }
    }
}

TEST_CASE("global fusion is permutation-invariant") {
    std::mt19937 rng(19);
    for (int i = 0; i < kCases; ++i) {
        const FramePtr frame = frame_for_case(i);
        std::vector<MassFunction> masses{draw(frame, rng), draw(frame, rng), draw(frame, rng)};
        const MassFunction base = beliefnet::global_fusion(masses);
        std::vector<std::size_t> order{0, 1, 2};
        while (std::next_permutation(order.begin(), order.end())) {
            std::vector<MassFunction> shuffled;
            for (std::size_t k : order) shuffled.push_back(masses[k]);
            REQUIRE(beliefnet::max_mass_difference(beliefnet::global_fusion(shuffled), base) <=
                    kTol);
        }
    }
}
