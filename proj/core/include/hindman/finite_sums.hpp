#pragma once

#include <cstdint>
#include <set>

#include "hindman/apartness.hpp"
#include "hindman/bignat.hpp"

namespace hindman {

/// A number of summands, i.e. an element of the length set A in FS^A(H).
using SumLength = std::uint64_t;

/// Sums of exactly `a` distinct elements of H. Empty when a > |H|. For an
/// apart H the sums have pairwise disjoint binary supports, so there are
/// exactly C(|H|, a) of them. a = 0 is a domain error: the empty sum is
/// excluded everywhere in this library.
std::set<BigNat> fs_exact(const ApartSet& H, SumLength a);

/// Union of fs_exact(H, j) over j in A. A must be non-empty; 0 in A is a
/// domain error as above.
std::set<BigNat> fs_lengths(const ApartSet& H, const std::set<SumLength>& A);

}  // namespace hindman
