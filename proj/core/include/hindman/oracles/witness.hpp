#pragma once

#include <cstdint>
#include <limits>

#include "hindman/oracles/mono_search.hpp"
#include "hindman/oracles/table_coloring.hpp"
#include "hindman/pattern.hpp"

namespace hindman::oracles {

enum class SearchStrategy { full_enumeration, incremental_dfs };

enum class WitnessStatus {
    /// value is the least n such that every r-coloring of [1, n] contains a
    /// monochromatic configuration; certificate avoids on [1, value-1].
    exact,
    /// No forcing n found up to max_n; value = max_n and certificate avoids
    /// on [1, max_n].
    lower_bound_only,
    /// The step budget ran out before the question was settled. value and
    /// certificate record the deepest avoidance established so far.
    budget_exceeded,
};

struct WitnessResult {
    WitnessStatus status;
    std::uint32_t value = 0;
    TableColoring certificate;
    std::uint64_t steps_used = 0;
};

struct SearchLimits {
    std::uint64_t budget_steps = std::numeric_limits<std::uint64_t>::max();
    unsigned workers = 1;
};

/// Least n <= max_n forcing a monochromatic instance of the pattern in every
/// r-coloring of [1, n], found either by iterating all colorings of each
/// interval (full_enumeration) or by depth-first extension of avoiding
/// colorings with pruning on completed configurations (incremental_dfs). The
/// two strategies are implemented independently and must agree; tests lean on
/// that as an internal oracle.
///
/// Both strategies fix the color of 1 to 0 (avoiders are closed under color
/// permutation, and the lexicographically least avoider starts with 0), and
/// both report the lexicographically least avoiding certificate, so results
/// are identical across strategies and worker counts.
WitnessResult witness_number(const LengthPattern& pattern, Color colors, std::uint32_t max_n,
                             SearchStrategy strategy, const SearchLimits& limits = {});

}  // namespace hindman::oracles
