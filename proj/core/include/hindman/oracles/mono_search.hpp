#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "hindman/oracles/table_coloring.hpp"
#include "hindman/pattern.hpp"

namespace hindman::oracles {

/// A monochromatic configuration found inside a table coloring: the
/// parameters, the instantiated set (all inside [1, n]) and its color.
struct ConfigWitness {
    PatternParams params;
    Color color = 0;
    std::set<std::uint64_t> instance;

    bool operator==(const ConfigWitness& rhs) const = default;
};

/// Enumerate every admissible parameter choice whose instantiated set fits
/// inside [1, n], in canonical order: (a, b) lexicographic for the (a, b)
/// families, index tuples lexicographic for Folkman, the single candidate for
/// Explicit. The callback receives the params and the instance as a sorted,
/// duplicate-free position list; returning true stops the walk.
///
/// Exposed because the searches below, the incremental DFS pruning and the
/// solver all need the identical canonical order.
bool for_each_params_within(
    const LengthPattern& pattern, std::uint32_t n,
    const std::function<bool(const PatternParams&, const std::vector<std::uint32_t>&)>& fn);

/// Same walk restricted to instances whose maximum element is exactly
/// `max_element`. Used to check only the configurations a new table entry can
/// complete.
bool for_each_params_with_max(
    const LengthPattern& pattern, std::uint32_t max_element,
    const std::function<bool(const PatternParams&, const std::vector<std::uint32_t>&)>& fn);

/// The canonically least monochromatic configuration of the pattern inside
/// the table, or nullopt when the coloring avoids the pattern entirely.
/// Absence is a value, not an error.
std::optional<ConfigWitness> find_mono_config(const TableColoring& coloring,
                                              const LengthPattern& pattern);

/// True iff find_mono_config would return nullopt.
bool is_avoiding(const TableColoring& coloring, const LengthPattern& pattern);

/// Re-check a reported witness against the table: instance inside [1, n],
/// equal to instantiate_pattern(pattern, params), and monochromatic in the
/// stated color.
bool verify_config_witness(const TableColoring& coloring, const LengthPattern& pattern,
                           const ConfigWitness& witness);

}  // namespace hindman::oracles
