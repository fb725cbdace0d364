#pragma once

#include <set>

#include "hindman/bignat.hpp"
#include "hindman/bit_profile.hpp"
#include "hindman/coloring.hpp"
#include "hindman/lowerbound/schedule.hpp"

namespace hindman::lowerbound {

/// Short and very short gaps of n relative to an enumeration of K.
///
/// A gap (a, b) of n is short when some x <= a is in K but not yet in K[b];
/// it is very short when some x <= a is already in K[mu(n)] but not in K[b].
/// Very short gaps are decidable from the stage prefix up to mu(n) alone;
/// short gaps need all of K.
struct GapClassification {
    BigNat n;
    std::set<Gap> short_gaps;
    std::set<Gap> very_short_gaps;
};

/// Classify every gap of n >= 1. n = 0 is a domain error.
GapClassification classify_gaps(const BigNat& n, const EnumerationSchedule& schedule);

/// The lower-bound coloring: c(n) = |VSG(n)| mod 2.
Color vsg_color(const EnumerationSchedule& schedule, const BigNat& n);

/// vsg_color packaged as a 2-coloring of all positive integers.
Coloring vsg_coloring(const EnumerationSchedule& schedule, const std::string& ref = "vsg");

}  // namespace hindman::lowerbound
