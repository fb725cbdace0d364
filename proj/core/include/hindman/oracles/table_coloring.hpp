#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hindman/coloring.hpp"

namespace hindman::oracles {

/// An explicit r-coloring of the interval [1, n], stored as a table.
/// n = 0 is the empty interval and is valid (it appears as the avoidance
/// certificate when a witness number is 1).
///
/// Text format (bit-exact): line 1 is "r n", line 2 holds the n colors of
/// 1..n separated by single spaces.
class TableColoring {
public:
    TableColoring(Color colors, std::vector<Color> table);

    Color colors() const { return colors_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(table_.size()); }
    /// Color of position p, 1-based. Pre: 1 <= p <= size().
    Color at(std::uint32_t position) const { return table_[position - 1]; }
    const std::vector<Color>& table() const { return table_; }

    std::string to_text() const;
    static TableColoring parse(const std::string& text);
    static TableColoring load(const std::string& path);
    void save(const std::string& path) const;

    /// View as a Coloring with domain [1, n].
    Coloring as_coloring() const;

    bool operator==(const TableColoring& rhs) const = default;

private:
    Color colors_;
    std::vector<Color> table_;
};

}  // namespace hindman::oracles
