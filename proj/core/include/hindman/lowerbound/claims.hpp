#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "hindman/apartness.hpp"
#include "hindman/bignat.hpp"
#include "hindman/bit_profile.hpp"
#include "hindman/finite_sums.hpp"
#include "hindman/lowerbound/schedule.hpp"

namespace hindman::lowerbound {

/// The three conditions under which the very-short-gap count of a sum
/// decomposes: (1) mu(m) < lambda(n); (2) for all x <= mu(m), x in K iff
/// x in K[lambda(n)]; (3) mu(m+n) = mu(n). Evaluated literally.
struct LargenessConditions {
    bool mu_below_lambda = false;
    bool membership_settled = false;
    bool mu_sum_preserved = false;

    bool all() const { return mu_below_lambda && membership_settled && mu_sum_preserved; }
    bool operator==(const LargenessConditions&) const = default;
};

LargenessConditions largeness_conditions(const BigNat& m, const BigNat& n,
                                         const EnumerationSchedule& schedule);

/// Evaluation of the decomposition VSG(m+n) = SG(m) u VSG(n): the left side,
/// both right-side parts, the largeness conditions, and whether the identity
/// holds as a disjoint union of gap sets with the connecting gap
/// (mu(m), lambda(n)) not very short in m+n. Guaranteed to hold whenever all
/// three conditions do. Requires mu(m) < lambda(n); anything else would merge
/// the two binary supports and is a domain error.
struct SumIdentityReport {
    LargenessConditions conditions;
    std::set<Gap> vsg_sum;   // VSG(m+n)
    std::set<Gap> sg_m;      // SG(m)
    std::set<Gap> vsg_n;     // VSG(n)
    bool holds = false;
};

SumIdentityReport check_sum_identity(const BigNat& m, const BigNat& n,
                                     const EnumerationSchedule& schedule);

/// The parity consequence of the claims: on a genuine solution with length
/// set {a, b, a+b, a+2b}, |SG(m)| is even for every m in FS^{=a} u FS^{=b} u
/// FS^{=a+b}(H) that has a partner n (in FS^{=b}, FS^{=a}, FS^{=b}
/// respectively) above it satisfying all three largeness conditions. Sums
/// without such a partner are skipped, not failed: finite grounds cannot
/// always supply one.
struct ParityCheckOutcome {
    std::uint64_t checked = 0;
    std::uint64_t skipped_no_partner = 0;
    std::vector<BigNat> violations;

    bool ok() const { return violations.empty(); }
};

ParityCheckOutcome claims_parity_check(const ApartSet& H, SumLength a, SumLength b,
                                       const EnumerationSchedule& schedule);

}  // namespace hindman::lowerbound
