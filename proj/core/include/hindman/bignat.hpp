#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hindman {

/// Unbounded non-negative integer.
///
/// The sets this library manipulates have binary supports that spread out
/// fast (apartness forces each element's bits above the previous element's),
/// so 64-bit words overflow almost immediately. This class keeps exactly the
/// operations the toolkit needs: addition, comparison, single-bit access and
/// bit-support scans, plus decimal I/O for file formats.
class BigNat {
public:
    BigNat() = default;
    explicit BigNat(std::uint64_t value);

    static BigNat power_of_two(std::uint64_t exponent);
    /// Sum of 2^e over the given exponents; duplicates are a domain error.
    static BigNat from_exponents(std::span<const std::uint64_t> exponents);
    static BigNat from_decimal(std::string_view text);

    bool is_zero() const { return limbs_.empty(); }

    bool bit(std::uint64_t index) const;
    void set_bit(std::uint64_t index);

    /// Number of set bits.
    std::uint64_t popcount() const;
    /// Index of the least significant set bit. Pre: non-zero.
    std::uint64_t lowest_set_bit() const;
    /// Index of the most significant set bit. Pre: non-zero.
    std::uint64_t highest_set_bit() const;
    /// All set-bit indices, ascending.
    std::vector<std::uint64_t> set_bits() const;

    BigNat& operator+=(const BigNat& rhs);
    friend BigNat operator+(BigNat lhs, const BigNat& rhs) {
        lhs += rhs;
        return lhs;
    }

    std::strong_ordering operator<=>(const BigNat& rhs) const;
    bool operator==(const BigNat& rhs) const = default;

    bool fits_uint64() const { return limbs_.size() <= 1; }
    /// Pre: fits_uint64().
    std::uint64_t to_uint64() const;

    std::string to_decimal() const;

    friend std::ostream& operator<<(std::ostream& os, const BigNat& n);

private:
    void trim();
    /// Multiply by a small factor and add a small addend, in place.
    void mul_add_small(std::uint64_t factor, std::uint64_t addend);
    /// Divide by a small non-zero divisor in place, return the remainder.
    std::uint64_t div_small(std::uint64_t divisor);

    // Little-endian 64-bit limbs, no trailing zero limb. Empty means zero.
    std::vector<std::uint64_t> limbs_;
};

}  // namespace hindman
