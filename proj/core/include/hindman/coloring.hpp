#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "hindman/bignat.hpp"

namespace hindman {

using Color = std::uint32_t;

/// A total r-coloring of the positive integers in a declared domain
/// [1, max] (or all of N_{>=1} when no max is set). Querying 0 or a value
/// above the max is a domain error, never a default color.
class Coloring {
public:
    using Evaluator = std::function<Color(const BigNat&)>;

    Coloring(Color colors, Evaluator evaluator, std::optional<BigNat> domain_max = std::nullopt,
             std::string ref = {})
        : colors_(colors),
          evaluator_(std::move(evaluator)),
          domain_max_(std::move(domain_max)),
          ref_(std::move(ref)) {}

    Color colors() const { return colors_; }
    const std::optional<BigNat>& domain_max() const { return domain_max_; }
    /// Human-readable identifier used in reports ("parity", "vsg:k.sched", ...).
    const std::string& ref() const { return ref_; }

    bool in_domain(const BigNat& n) const {
        if (n.is_zero()) return false;
        return !domain_max_ || !(*domain_max_ < n);
    }

    /// Color of n. Throws std::domain_error outside the declared domain.
    Color at(const BigNat& n) const;

private:
    Color colors_;
    Evaluator evaluator_;
    std::optional<BigNat> domain_max_;
    std::string ref_;
};

/// c(n) = value for every n >= 1, with r colors.
Coloring constant_coloring(Color colors, Color value);
/// c(n) = n mod 2.
Coloring parity_coloring();
/// c(n) = |binary support of n| mod 2. Constant on FS^{=i} of any apart set.
Coloring popcount_parity_coloring();

}  // namespace hindman
