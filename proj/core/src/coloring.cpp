#include "hindman/coloring.hpp"

#include <stdexcept>

namespace hindman {

Color Coloring::at(const BigNat& n) const {
    if (!in_domain(n))
        throw std::domain_error("Coloring::at: " + n.to_decimal() + " is outside the declared domain");
    Color c = evaluator_(n);
    if (c >= colors_) throw std::logic_error("Coloring::at: evaluator produced an out-of-range color");
    return c;
}

Coloring constant_coloring(Color colors, Color value) {
    if (colors == 0 || value >= colors)
        throw std::domain_error("constant_coloring: value must be in [0, colors)");
    return Coloring(colors, [value](const BigNat&) { return value; }, std::nullopt,
                    "const:" + std::to_string(value));
}

Coloring parity_coloring() {
    return Coloring(2, [](const BigNat& n) { return static_cast<Color>(n.bit(0)); }, std::nullopt,
                    "parity");
}

Coloring popcount_parity_coloring() {
    return Coloring(2, [](const BigNat& n) { return static_cast<Color>(n.popcount() & 1); },
                    std::nullopt, "popcount-parity");
}

}  // namespace hindman
