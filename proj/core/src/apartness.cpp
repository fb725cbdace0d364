#include "hindman/apartness.hpp"

#include <stdexcept>
#include <utility>

#include "hindman/bit_profile.hpp"

namespace hindman {

bool is_apart(std::span<const BigNat> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].is_zero()) throw std::domain_error("is_apart: elements must be >= 1");
        if (i > 0 && !(xs[i - 1] < xs[i]))
            throw std::domain_error("is_apart: list must be strictly increasing");
    }
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        if (mu(xs[i]) >= lambda(xs[i + 1])) return false;
    }
    return true;
}

ApartSet::ApartSet(std::vector<BigNat> elements) : elements_(std::move(elements)) {
    if (!is_apart(elements_)) throw std::domain_error("ApartSet: Apartness Condition violated");
}

ApartSet ApartSet::prefix(std::size_t count) const {
    if (count > elements_.size()) throw std::domain_error("ApartSet::prefix: count exceeds size");
    ApartSet out;
    out.elements_.assign(elements_.begin(), elements_.begin() + static_cast<std::ptrdiff_t>(count));
    return out;
}

ApartSet ApartSet::subset(std::span<const std::size_t> indices) const {
    ApartSet out;
    out.elements_.reserve(indices.size());
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t idx : indices) {
        if (idx >= elements_.size()) throw std::domain_error("ApartSet::subset: index out of range");
        if (!first && idx <= prev) throw std::domain_error("ApartSet::subset: indices must ascend");
        out.elements_.push_back(elements_[idx]);
        prev = idx;
        first = false;
    }
    return out;
}

ApartSet apart_ground(std::size_t count, std::uint64_t start_exp, std::uint64_t stride) {
    if (count < 1) throw std::domain_error("apart_ground: count must be >= 1");
    if (stride < 1) throw std::domain_error("apart_ground: stride must be >= 1");
    std::vector<BigNat> elements;
    elements.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        elements.push_back(BigNat::power_of_two(start_exp + static_cast<std::uint64_t>(i) * stride));
    return ApartSet(std::move(elements));
}

}  // namespace hindman
