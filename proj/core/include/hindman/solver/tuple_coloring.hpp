#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "hindman/bignat.hpp"
#include "hindman/coloring.hpp"

namespace hindman::solver {

/// A coloring of strictly increasing n-tuples over some ground set.
class TupleColoring {
public:
    using Evaluator = std::function<Color(std::span<const BigNat>)>;

    TupleColoring(std::uint32_t arity, Color colors, Evaluator evaluator);

    std::uint32_t arity() const { return arity_; }
    Color colors() const { return colors_; }

    /// Color of a strictly increasing tuple of length arity().
    Color at(std::span<const BigNat> tuple) const;

    /// The coloring g_n derived from a base 2-coloring: bit i-1 of the
    /// encoded color is c(x_1 + ... + x_i). Colors = 2^arity.
    static TupleColoring derived(const Coloring& base, std::uint32_t arity);

    /// Tuples colored by the base color of their full sum; used by the
    /// stagewise refinement (f_i(x_1..x_i) = c(x_1 + ... + x_i)).
    static TupleColoring sum_colored(const Coloring& base, std::uint32_t arity);

private:
    std::uint32_t arity_;
    Color colors_;
    Evaluator evaluator_;
};

/// Encoded color of one tuple under the derived coloring, exposed directly:
/// bit i-1 of the result is base(x_1 + ... + x_i). Throws std::domain_error
/// if a partial sum falls outside the base coloring's domain.
Color derived_tuple_color(const Coloring& base, std::span<const BigNat> tuple);

}  // namespace hindman::solver
