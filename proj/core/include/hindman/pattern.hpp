#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hindman/finite_sums.hpp"

namespace hindman {

/// Symbolic descriptor of one statement family. Instantiated with concrete
/// parameters it yields the finite set A of sum-lengths in FS^A(H):
///
///   Schur         {a, b, a+b}
///   VdW(l)        {a, a+b, ..., a+(l-1)b}
///   Brauer(l, s)  {a, a+b, ..., a+(l-1)b} u {s*b}
///   Folkman(l)    all non-empty subset sums of {i_1, ..., i_l}
///   Explicit      a fixed non-empty set of positive integers
class LengthPattern {
public:
    enum class Kind { schur, vdw, brauer, folkman, explicit_set };

    static LengthPattern schur();
    static LengthPattern vdw(SumLength ell);
    static LengthPattern brauer(SumLength ell, SumLength s);
    static LengthPattern folkman(SumLength ell);
    static LengthPattern explicit_set(std::set<SumLength> lengths);

    Kind kind() const { return kind_; }
    SumLength ell() const { return ell_; }
    SumLength s() const { return s_; }
    const std::set<SumLength>& explicit_lengths() const { return explicit_; }

    /// True for the kinds parameterised by a pair (a, b).
    bool uses_ab() const {
        return kind_ == Kind::schur || kind_ == Kind::vdw || kind_ == Kind::brauer;
    }

    /// Spec string: "schur", "vdw:3", "brauer:3:1", "folkman:2", "explicit:1,2,5".
    std::string to_string() const;
    /// Inverse of to_string; domain error naming the offending token.
    static LengthPattern parse(std::string_view text);

    bool operator==(const LengthPattern& rhs) const = default;

private:
    LengthPattern(Kind kind, SumLength ell, SumLength s, std::set<SumLength> explicit_lengths)
        : kind_(kind), ell_(ell), s_(s), explicit_(std::move(explicit_lengths)) {}

    Kind kind_ = Kind::schur;
    SumLength ell_ = 0;
    SumLength s_ = 0;
    std::set<SumLength> explicit_;
};

/// Concrete parameters for a pattern: a, b for Schur/VdW/Brauer, a strictly
/// increasing index tuple for Folkman, nothing for Explicit. Unused fields
/// stay zero/empty.
struct PatternParams {
    SumLength a = 0;
    SumLength b = 0;
    std::vector<SumLength> indices;

    static PatternParams ab(SumLength a, SumLength b) { return {a, b, {}}; }
    static PatternParams folkman(std::vector<SumLength> indices) {
        return {0, 0, std::move(indices)};
    }
    static PatternParams none() { return {}; }

    bool operator==(const PatternParams& rhs) const = default;
    /// Lexicographic on (a, b) / on the index tuple; the search tie-break order.
    auto operator<=>(const PatternParams& rhs) const = default;
};

/// The concrete set of sum-lengths named by (pattern, params). Duplicates
/// collapse: the result is a set. With require_distinct_params set, a == b is
/// rejected for the (a, b) families. Mismatched params are a domain error.
std::set<SumLength> instantiate_pattern(const LengthPattern& pattern, const PatternParams& params,
                                        bool require_distinct_params = false);

}  // namespace hindman
