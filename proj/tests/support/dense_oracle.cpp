#include "dense_oracle.hpp"

#include <map>
#include <stdexcept>

namespace oracle {

namespace {

std::size_t bit_count(std::size_t mask) {
    std::size_t n = 0;
    for (; mask; mask >>= 1) n += mask & 1u;
    return n;
}

DenseMass zeros(std::size_t element_count) {
    if (element_count > 12) throw std::invalid_argument("dense oracle: frame too large");
    return {element_count, std::vector<double>(std::size_t{1} << element_count, 0.0)};
}

} // namespace

DenseMass to_dense(const beliefnet::MassFunction& m) {
    DenseMass d = zeros(m.frame()->size());
    for (const auto& [bits, w] : m.focals()) d.by_subset[bits] += w;
    return d;
}

beliefnet::MassFunction to_sparse(const DenseMass& d, const beliefnet::FramePtr& frame) {
    std::map<std::uint32_t, double> masses;
    for (std::size_t k = 0; k < d.by_subset.size(); ++k)
        if (d.by_subset[k] != 0.0) masses[static_cast<std::uint32_t>(k)] = d.by_subset[k];
    return beliefnet::MassFunction::from_bit_masses(frame, std::move(masses));
}

DenseMass combine(const DenseMass& a, const DenseMass& b, bool normalized) {
    if (a.element_count != b.element_count)
        throw std::invalid_argument("dense oracle: frame size mismatch");
    DenseMass out = zeros(a.element_count);
    for (std::size_t s = 0; s < a.by_subset.size(); ++s) {
        if (a.by_subset[s] == 0.0) continue;
        for (std::size_t t = 0; t < b.by_subset.size(); ++t)
            out.by_subset[s & t] += a.by_subset[s] * b.by_subset[t];
    }
    if (normalized) {
        const double scale = 1.0 - out.by_subset[0];
        if (scale <= 0.0) throw std::invalid_argument("dense oracle: total conflict");
        out.by_subset[0] = 0.0;
        for (double& w : out.by_subset) w /= scale;
    }
    return out;
}

std::vector<double> pignistic(const DenseMass& d) {
    const double norm = 1.0 - d.by_subset[0];
    if (norm <= 0.0) throw std::invalid_argument("dense oracle: all mass on the empty set");
    std::vector<double> probs(d.element_count, 0.0);
    for (std::size_t e = 0; e < d.element_count; ++e) {
        double total = 0.0;
        for (std::size_t s = 1; s < d.by_subset.size(); ++s)
            if ((s >> e) & 1u) total += d.by_subset[s] / static_cast<double>(bit_count(s));
        probs[e] = total / norm;
    }
    return probs;
}

DenseMass extend(const DenseMass& d, std::size_t left_size, std::size_t right_size,
                 std::size_t position) {
    const std::size_t product_size = left_size * right_size;
    DenseMass out = zeros(product_size);
    for (std::size_t s = 0; s < d.by_subset.size(); ++s) {
        if (d.by_subset[s] == 0.0) continue;
        std::size_t cylinder = 0;
        for (std::size_t e = 0; e < product_size; ++e) {
            const std::size_t coord = (position == 0) ? e / right_size : e % right_size;
            if ((s >> coord) & 1u) cylinder |= std::size_t{1} << e;
        }
        out.by_subset[cylinder] += d.by_subset[s];
    }
    return out;
}

DenseMass project(const DenseMass& d, std::size_t left_size, std::size_t right_size,
                  std::size_t position) {
    const std::size_t product_size = left_size * right_size;
    DenseMass out = zeros(position == 0 ? left_size : right_size);
    for (std::size_t s = 0; s < d.by_subset.size(); ++s) {
        if (d.by_subset[s] == 0.0) continue;
        std::size_t shadow = 0;
        for (std::size_t e = 0; e < product_size; ++e) {
            if (!((s >> e) & 1u)) continue;
            const std::size_t coord = (position == 0) ? e / right_size : e % right_size;
            shadow |= std::size_t{1} << coord;
        }
        out.by_subset[shadow] += d.by_subset[s];
    }
    return out;
}

} // namespace oracle
