#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "hindman/apartness.hpp"
#include "hindman/coloring.hpp"
#include "hindman/pattern.hpp"

namespace hindman::solver {

/// A certified configuration: an apart set H and pattern parameters such that
/// every sum of j distinct elements of H, for every j in A, has the stated
/// color. A = instantiate_pattern(pattern, params) and max(A) <= |H|.
struct Solution {
    ApartSet H;
    LengthPattern pattern = LengthPattern::schur();
    PatternParams params;
    std::set<SumLength> lengths;  // the set A
    Color color = 0;
};

enum class SolveMode { direct, pipeline, iterated };

struct SolveConfig {
    SolveMode mode = SolveMode::direct;
    ApartSet ground;
    /// Size of the apart set searched for / extracted. 0 means automatic:
    /// 2k for pipeline, k for iterated (k = the pattern-core witness number).
    /// direct mode requires an explicit value.
    std::size_t target_size = 0;
    std::uint64_t budget_steps = std::numeric_limits<std::uint64_t>::max();
    unsigned workers = 1;
    /// Bound and budget for the pattern-core witness computation k feeding
    /// the pipeline/iterated modes.
    std::uint32_t core_max_n = 64;
    std::uint64_t core_budget_steps = std::numeric_limits<std::uint64_t>::max();
    /// Extra elements granted to early refinement stages (iterated mode).
    std::size_t stage_slack = 0;
};

enum class SolveStatus {
    found,
    /// Search space exhausted without a certified configuration.
    not_found,
    budget_exceeded,
    /// The pattern-core witness number needed for pipeline/iterated modes was
    /// not computable within core_max_n / core_budget_steps.
    core_witness_unavailable,
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::not_found;
    std::optional<Solution> solution;
    std::uint64_t steps_used = 0;
    /// Pattern-core witness k used by pipeline/iterated modes (0 for direct).
    std::uint32_t core_k = 0;
    std::string detail;
};

/// Searches for a Solution of the pattern under the coloring.
///
/// direct:   exhaustive walk over apart subsets of the ground (size
///           target_size, lexicographic by elements) and admissible
///           parameters (canonical order); returns the canonically least
///           certified pair. Works for any number of colors.
/// pipeline: computes k = witness_number(pattern, 2), extracts a subset
///           homogeneous for the derived arity-k tuple coloring, reads the
///           induced length coloring C(i) = c_i off the encoded color, and
///           finds the configuration inside C. Requires 2 base colors. The
///           exported H is the prefix of the homogeneous set on which every
///           claimed sum length is fully covered.
/// iterated: same endgame, but the homogeneous set comes from k stagewise
///           refinements (arity 1, 2, ..., k), so the whole set is exported.
///
/// Every returned Solution has been re-checked with verify_solution.
SolveOutcome solve(const Coloring& coloring, const LengthPattern& pattern, const SolveConfig& cfg);

struct VerifyReport {
    bool ok = false;
    std::string reason;
    /// Colors observed on each sum length, for inspection.
    std::map<SumLength, std::set<Color>> colors_by_length;
};

/// Re-derives everything a Solution claims: H apart, A equal to the
/// instantiated pattern, max(A) <= |H|, and fs_lengths(H, A) monochromatic in
/// the stated color. A domain error while evaluating the coloring counts as
/// a verification failure with its reason recorded.
VerifyReport verify_solution(const Coloring& coloring, const Solution& sol);

}  // namespace hindman::solver
