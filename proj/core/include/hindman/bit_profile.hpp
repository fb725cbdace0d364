#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hindman/bignat.hpp"

namespace hindman {

/// A pair (t_i, t_{i+1}) of consecutive binary exponents of a number.
using Gap = std::pair<std::uint64_t, std::uint64_t>;

/// The exponent decomposition of a positive integer n = 2^{t_1} + ... + 2^{t_k},
/// t_1 < ... < t_k, together with the projections lambda(n) = t_1, mu(n) = t_k
/// and the list of gaps (t_i, t_{i+1}).
struct BitProfile {
    std::vector<std::uint64_t> exponents;
    std::uint64_t lambda = 0;
    std::uint64_t mu = 0;
    std::vector<Gap> gaps;
};

/// Decompose n >= 1 into its bit profile. n = 0 is a domain error: lambda and
/// mu are undefined on zero.
BitProfile bit_profile(const BigNat& n);

/// Least binary exponent of n >= 1.
std::uint64_t lambda(const BigNat& n);
/// Greatest binary exponent of n >= 1.
std::uint64_t mu(const BigNat& n);

/// Rebuild the number a profile describes. Inverse of bit_profile.
BigNat reconstruct(const BitProfile& profile);

}  // namespace hindman
