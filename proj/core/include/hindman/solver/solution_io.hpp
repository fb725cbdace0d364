#pragma once

#include <cstdint>
#include <string>

#include "hindman/solver/solve.hpp"

namespace hindman::solver {

/// Solution document:
/// {
///   "H": ["4", "32", "256"],          decimal strings
///   "pattern": "brauer:3:1",
///   "params": {"a": 1, "b": 1},       or {"indices": [...]} / {}
///   "A": [1, 2, 3],
///   "color": 0,
///   "coloring_ref": "vsg:k.sched",
///   "verified": true,
///   "mode": "direct",
///   "budget_used": 123
/// }
std::string solution_to_json(const Solution& sol, const std::string& coloring_ref, bool verified,
                             const std::string& mode, std::uint64_t budget_used);

struct SolutionDocument {
    Solution solution;
    std::string coloring_ref;
    bool verified = false;
    std::string mode;
    std::uint64_t budget_used = 0;
};

/// Parses and re-validates a solution document (throws std::domain_error on
/// malformed input or on an H / pattern / A mismatch).
SolutionDocument solution_from_json(const std::string& text);

std::string mode_name(SolveMode mode);

}  // namespace hindman::solver
