#include "hindman/bignat.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace hindman {

namespace {
constexpr std::uint64_t kBitsPerLimb = 64;
}

BigNat::BigNat(std::uint64_t value) {
    if (value != 0) limbs_.push_back(value);
}

BigNat BigNat::power_of_two(std::uint64_t exponent) {
    BigNat n;
    n.set_bit(exponent);
    return n;
}

BigNat BigNat::from_exponents(std::span<const std::uint64_t> exponents) {
    BigNat n;
    for (std::uint64_t e : exponents) {
        if (n.bit(e)) throw std::domain_error("BigNat::from_exponents: duplicate exponent");
        n.set_bit(e);
    }
    return n;
}

BigNat BigNat::from_decimal(std::string_view text) {
    if (text.empty()) throw std::domain_error("BigNat::from_decimal: empty string");
    BigNat n;
    for (char c : text) {
        if (c < '0' || c > '9')
            throw std::domain_error("BigNat::from_decimal: invalid digit '" + std::string(1, c) + "'");
        n.mul_add_small(10, static_cast<std::uint64_t>(c - '0'));
    }
    return n;
}

bool BigNat::bit(std::uint64_t index) const {
    std::uint64_t limb = index / kBitsPerLimb;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (index % kBitsPerLimb)) & 1u;
}

void BigNat::set_bit(std::uint64_t index) {
    std::uint64_t limb = index / kBitsPerLimb;
    if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
    limbs_[limb] |= std::uint64_t{1} << (index % kBitsPerLimb);
}

std::uint64_t BigNat::popcount() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : limbs_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

std::uint64_t BigNat::lowest_set_bit() const {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        if (limbs_[i] != 0)
            return i * kBitsPerLimb + static_cast<std::uint64_t>(std::countr_zero(limbs_[i]));
    }
    throw std::domain_error("BigNat::lowest_set_bit: zero has no set bits");
}

std::uint64_t BigNat::highest_set_bit() const {
    if (limbs_.empty()) throw std::domain_error("BigNat::highest_set_bit: zero has no set bits");
    std::uint64_t top = limbs_.back();
    return (limbs_.size() - 1) * kBitsPerLimb + (63 - static_cast<std::uint64_t>(std::countl_zero(top)));
}

std::vector<std::uint64_t> BigNat::set_bits() const {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t w = limbs_[i];
        while (w != 0) {
            unsigned b = static_cast<unsigned>(std::countr_zero(w));
            out.push_back(i * kBitsPerLimb + b);
            w &= w - 1;
        }
    }
    return out;
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
    if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    unsigned carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t r = i < rhs.limbs_.size() ? rhs.limbs_[i] : 0;
        std::uint64_t sum = limbs_[i] + r;
        unsigned c1 = sum < r ? 1u : 0u;
        std::uint64_t sum2 = sum + carry;
        unsigned c2 = sum2 < sum ? 1u : 0u;
        limbs_[i] = sum2;
        carry = c1 | c2;
    }
    if (carry) limbs_.push_back(1);
    return *this;
}

std::strong_ordering BigNat::operator<=>(const BigNat& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::uint64_t BigNat::to_uint64() const {
    if (!fits_uint64()) throw std::domain_error("BigNat::to_uint64: value exceeds 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

void BigNat::mul_add_small(std::uint64_t factor, std::uint64_t addend) {
    unsigned __int128 carry = addend;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 prod = static_cast<unsigned __int128>(limbs_[i]) * factor + carry;
        limbs_[i] = static_cast<std::uint64_t>(prod);
        carry = prod >> 64;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint64_t>(carry));
        carry >>= 64;
    }
    trim();
}

std::uint64_t BigNat::div_small(std::uint64_t divisor) {
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint64_t>(rem);
}

std::string BigNat::to_decimal() const {
    if (is_zero()) return "0";
    BigNat tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint64_t digit = tmp.div_small(10);
        out.push_back(static_cast<char>('0' + digit));
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigNat& n) { return os << n.to_decimal(); }

}  // namespace hindman
