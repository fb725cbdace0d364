#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hindman/bignat.hpp"

namespace hindman {

/// Apartness Condition on a strictly increasing list of positive integers:
/// for consecutive x < x', mu(x) < lambda(x'). Pairwise apartness follows by
/// transitivity. Throws std::domain_error if the list is not strictly
/// increasing or contains 0.
bool is_apart(std::span<const BigNat> xs);

/// A strictly increasing list of positive integers whose binary supports
/// occupy disjoint, ordered bit intervals. Every subset of an ApartSet is
/// again apart, so views and prefixes can be taken freely.
class ApartSet {
public:
    ApartSet() = default;
    /// Validates strict increase, positivity and apartness; domain error otherwise.
    explicit ApartSet(std::vector<BigNat> elements);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const BigNat& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<BigNat>& elements() const { return elements_; }

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    /// First `count` elements (count <= size).
    ApartSet prefix(std::size_t count) const;
    /// Subset selected by ascending indices into this set.
    ApartSet subset(std::span<const std::size_t> indices) const;

    bool operator==(const ApartSet& rhs) const = default;

private:
    std::vector<BigNat> elements_;
};

/// The canonical apart family: {2^(start_exp + i*stride) : 0 <= i < count}.
/// Pre: count >= 1, stride >= 1.
ApartSet apart_ground(std::size_t count, std::uint64_t start_exp, std::uint64_t stride);

}  // namespace hindman
