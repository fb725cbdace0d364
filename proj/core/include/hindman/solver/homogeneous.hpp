#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "hindman/apartness.hpp"
#include "hindman/coloring.hpp"
#include "hindman/solver/tuple_coloring.hpp"

namespace hindman::solver {

enum class ExtractStatus {
    found,
    /// The exhaustive walk finished: no homogeneous subset of the requested
    /// size exists inside this ground.
    none_in_ground,
    /// The walk was cut short; absence was NOT established.
    budget_exceeded,
};

struct ExtractResult {
    ExtractStatus status = ExtractStatus::none_in_ground;
    std::optional<ApartSet> set;
    Color color = 0;  // the homogeneous color, when found
    std::uint64_t steps = 0;
};

/// Finite surrogate for one Ramsey step: the first subset of `ground` of size
/// `target_size` (in lexicographic order by elements) whose arity-tuples all
/// receive the same color. Subsets are grown element by element and a branch
/// is abandoned as soon as two completed tuples disagree, which keeps the
/// walk exhaustive but cheap.
ExtractResult extract_homogeneous(const ApartSet& ground, const TupleColoring& tc,
                                  std::size_t target_size,
                                  std::uint64_t budget_steps = std::numeric_limits<std::uint64_t>::max());

enum class RefinementStatus { found, failed_stage, budget_exceeded };

struct RefinementResult {
    RefinementStatus status = RefinementStatus::failed_stage;
    std::optional<ApartSet> set;
    /// stage_colors[i-1] is the color of every i-element sum of the final set.
    std::vector<Color> stage_colors;
    /// Stage (1-based) at which extraction failed or ran out of budget.
    std::size_t stage = 0;
    std::uint64_t steps = 0;
};

/// The stagewise construction: H_0 = ground, and H_i is a homogeneous subset
/// of H_{i-1} for the arity-i coloring f_i(x_1..x_i) = c(x_1+...+x_i),
/// i = 1..k. Every i-element sum of the result then has the single color
/// recorded for stage i. Stage i extracts size target_size + (k-i)*stage_slack,
/// leaving later stages room to refine when slack is positive.
RefinementResult iterated_refinement(const ApartSet& ground, const Coloring& c, std::size_t k,
                                     std::size_t target_size,
                                     std::uint64_t budget_steps = std::numeric_limits<std::uint64_t>::max(),
                                     std::size_t stage_slack = 0);

}  // namespace hindman::solver
