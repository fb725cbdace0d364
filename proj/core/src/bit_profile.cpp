#include "hindman/bit_profile.hpp"

#include <stdexcept>

namespace hindman {

BitProfile bit_profile(const BigNat& n) {
    if (n.is_zero()) throw std::domain_error("bit_profile: lambda/mu are undefined on 0");
    BitProfile p;
    p.exponents = n.set_bits();
    p.lambda = p.exponents.front();
    p.mu = p.exponents.back();
    p.gaps.reserve(p.exponents.size() - 1);
    for (std::size_t i = 0; i + 1 < p.exponents.size(); ++i)
        p.gaps.emplace_back(p.exponents[i], p.exponents[i + 1]);
    return p;
}

std::uint64_t lambda(const BigNat& n) {
    if (n.is_zero()) throw std::domain_error("lambda: undefined on 0");
    return n.lowest_set_bit();
}

std::uint64_t mu(const BigNat& n) {
    if (n.is_zero()) throw std::domain_error("mu: undefined on 0");
    return n.highest_set_bit();
}

BigNat reconstruct(const BitProfile& profile) {
    return BigNat::from_exponents(profile.exponents);
}

}  // namespace hindman
