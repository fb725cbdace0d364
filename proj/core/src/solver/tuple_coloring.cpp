#include "hindman/solver/tuple_coloring.hpp"

#include <stdexcept>

namespace hindman::solver {

TupleColoring::TupleColoring(std::uint32_t arity, Color colors, Evaluator evaluator)
    : arity_(arity), colors_(colors), evaluator_(std::move(evaluator)) {
    if (arity_ < 1) throw std::domain_error("TupleColoring: arity must be >= 1");
    if (colors_ < 1) throw std::domain_error("TupleColoring: need at least one color");
}

Color TupleColoring::at(std::span<const BigNat> tuple) const {
    if (tuple.size() != arity_)
        throw std::domain_error("TupleColoring::at: tuple length does not match arity");
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i) {
        if (!(tuple[i] < tuple[i + 1]))
            throw std::domain_error("TupleColoring::at: tuple must be strictly increasing");
    }
    Color c = evaluator_(tuple);
    if (c >= colors_)
        throw std::logic_error("TupleColoring::at: evaluator produced an out-of-range color");
    return c;
}

Color derived_tuple_color(const Coloring& base, std::span<const BigNat> tuple) {
    if (base.colors() != 2)
        throw std::domain_error("derived_tuple_color: base coloring must use 2 colors");
    Color encoded = 0;
    BigNat sum;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        sum += tuple[i];
        encoded |= base.at(sum) << i;
    }
    return encoded;
}

TupleColoring TupleColoring::derived(const Coloring& base, std::uint32_t arity) {
    if (arity >= 31) throw std::domain_error("TupleColoring::derived: arity too large to encode");
    Color colors = Color{1} << arity;
    return TupleColoring(arity, colors, [base](std::span<const BigNat> tuple) {
        return derived_tuple_color(base, tuple);
    });
}

TupleColoring TupleColoring::sum_colored(const Coloring& base, std::uint32_t arity) {
    return TupleColoring(arity, base.colors(), [base](std::span<const BigNat> tuple) {
        BigNat sum;
        for (const BigNat& x : tuple) sum += x;
        return base.at(sum);
    });
}

}  // namespace hindman::solver
