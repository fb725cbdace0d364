#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <bit>
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "hindman/apartness.hpp"
#include "hindman/bignat.hpp"
#include "hindman/bit_profile.hpp"
#include "hindman/coloring.hpp"
#include "hindman/finite_sums.hpp"
#include "hindman/pattern.hpp"
#include "test_util.hpp"

using namespace hindman;

namespace {

BigNat nat(std::uint64_t v) { return BigNat(v); }

std::set<BigNat> nats(std::initializer_list<std::uint64_t> vs) {
    std::set<BigNat> out;
    for (std::uint64_t v : vs) out.insert(nat(v));
    return out;
}

ApartSet aset(std::initializer_list<std::uint64_t> vs) {
    std::vector<BigNat> elements;
    for (std::uint64_t v : vs) elements.push_back(nat(v));
    return ApartSet(std::move(elements));
}

}  // namespace

TEST_CASE("BigNat decimal round trip and arithmetic") {
    CHECK(BigNat::from_decimal("0").to_decimal() == "0");
    CHECK(BigNat::from_decimal("18446744073709551616").to_decimal() == "18446744073709551616");
    CHECK_THROWS_AS(BigNat::from_decimal("12x"), std::domain_error);
    CHECK_THROWS_AS(BigNat::from_decimal(""), std::domain_error);

    testutil::Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        BigNat a = testutil::random_positive(rng, 200);
        CHECK(BigNat::from_decimal(a.to_decimal()) == a);
    }
    // Addition agrees with native arithmetic when it fits.
    for (int i = 0; i < 200; ++i) {
        std::uint64_t x = testutil::pick(rng, 0, 1u << 30);
        std::uint64_t y = testutil::pick(rng, 0, 1u << 30);
        CHECK((nat(x) + nat(y)).to_uint64() == x + y);
    }
    // Carry across a limb boundary.
    BigNat top = BigNat::power_of_two(63);
    CHECK((top + top).to_decimal() == "18446744073709551616");
    CHECK_THROWS_AS(nat(0).lowest_set_bit(), std::domain_error);
    std::vector<std::uint64_t> dup{3, 3};
    CHECK_THROWS_AS(BigNat::from_exponents(dup), std::domain_error);
}

TEST_CASE("bit_profile on the worked examples") {
    BitProfile p10 = bit_profile(nat(10));
    CHECK(p10.exponents == std::vector<std::uint64_t>{1, 3});
    CHECK(p10.lambda == 1);
    CHECK(p10.mu == 3);
    CHECK(p10.gaps == std::vector<Gap>{{1, 3}});

    BitProfile p1 = bit_profile(nat(1));
    CHECK(p1.exponents == std::vector<std::uint64_t>{0});
    CHECK(p1.lambda == 0);
    CHECK(p1.mu == 0);
    CHECK(p1.gaps.empty());

    BitProfile p11 = bit_profile(nat(11));
    CHECK(p11.exponents == std::vector<std::uint64_t>{0, 1, 3});
    CHECK(p11.lambda == 0);
    CHECK(p11.mu == 3);
    CHECK(p11.gaps == std::vector<Gap>{{0, 1}, {1, 3}});

    CHECK_THROWS_AS(bit_profile(nat(0)), std::domain_error);
}

TEST_CASE("bit_profile reconstruction round trip") {
    for (std::uint64_t v = 1; v <= 2000; ++v) CHECK(reconstruct(bit_profile(nat(v))) == nat(v));
    testutil::Rng rng(2);
    for (int i = 0; i < 300; ++i) {
        BigNat v = testutil::random_positive(rng, 150);
        CHECK(reconstruct(bit_profile(v)) == v);
    }
}

TEST_CASE("is_apart on the worked examples") {
    CHECK(is_apart(aset({2, 8}).elements()));
    std::vector<BigNat> three_six{nat(3), nat(6)};
    CHECK_FALSE(is_apart(three_six));
    std::vector<BigNat> single{nat(5)};
    CHECK(is_apart(single));

    std::vector<BigNat> zero{nat(0), nat(2)};
    CHECK_THROWS_AS(is_apart(zero), std::domain_error);
    std::vector<BigNat> unordered{nat(4), nat(4)};
    CHECK_THROWS_AS(is_apart(unordered), std::domain_error);
    CHECK_THROWS_AS(ApartSet({nat(3), nat(6)}), std::domain_error);
}

TEST_CASE("apart_ground builds power-of-two families") {
    CHECK(apart_ground(3, 0, 1).elements() == aset({1, 2, 4}).elements());
    CHECK(apart_ground(2, 2, 3).elements() == aset({4, 32}).elements());
    CHECK(apart_ground(1, 10, 1).elements() == aset({1024}).elements());
    CHECK_THROWS_AS(apart_ground(0, 0, 1), std::domain_error);
    CHECK_THROWS_AS(apart_ground(2, 0, 0), std::domain_error);
}

TEST_CASE("apartness is inherited by subsets") {
    testutil::Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        ApartSet H = testutil::random_apart_set(rng, 2 + i % 7);
        std::vector<std::size_t> indices;
        for (std::size_t j = 0; j < H.size(); ++j)
            if (testutil::pick(rng, 0, 1)) indices.push_back(j);
        ApartSet sub = H.subset(indices);
        CHECK(is_apart(sub.elements()));
    }
}

TEST_CASE("fs_exact on the worked examples") {
    CHECK(fs_exact(aset({1, 2, 8}), 2) == nats({3, 9, 10}));
    CHECK(fs_exact(aset({1, 2, 4}), 3) == nats({7}));
    CHECK(fs_exact(aset({1, 2}), 3).empty());
    CHECK_THROWS_AS(fs_exact(aset({1, 2}), 0), std::domain_error);
}

TEST_CASE("fs_lengths on the worked examples") {
    CHECK(fs_lengths(aset({1, 2, 8}), {1, 3}) == nats({1, 2, 8, 11}));
    CHECK(fs_lengths(aset({1, 2, 4}), {1, 2, 3}) == nats({1, 2, 3, 4, 5, 6, 7}));
    CHECK(fs_lengths(aset({2, 8}), {4}).empty());
    CHECK_THROWS_AS(fs_lengths(aset({1, 2}), {}), std::domain_error);
}

TEST_CASE("fs_exact agrees with a word-sized subset-sum oracle") {
    // Independent check: rebuild every sum with plain 64-bit arithmetic.
    testutil::Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        std::vector<BigNat> elements;
        std::vector<std::uint64_t> words;
        std::uint64_t next_exp = testutil::pick(rng, 0, 4);
        while (elements.size() < 6 && next_exp < 58) {
            unsigned bits = static_cast<unsigned>(testutil::pick(rng, 1, 2));
            std::uint64_t word = 0;
            std::uint64_t e = next_exp;
            for (unsigned b = 0; b < bits && e < 62; ++b) {
                word |= std::uint64_t{1} << e;
                e += testutil::pick(rng, 1, 3);
            }
            words.push_back(word);
            std::vector<std::uint64_t> exps;
            for (std::uint64_t j = 0; j < 62; ++j)
                if (word >> j & 1) exps.push_back(j);
            elements.push_back(BigNat::from_exponents(exps));
            next_exp = exps.back() + 1 + testutil::pick(rng, 0, 3);
        }
        ApartSet H(elements);
        for (SumLength a = 1; a <= H.size(); ++a) {
            std::set<std::uint64_t> expected;
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << words.size()); ++mask) {
                if (static_cast<SumLength>(std::popcount(mask)) != a) continue;
                std::uint64_t sum = 0;
                for (std::size_t j = 0; j < words.size(); ++j)
                    if (mask >> j & 1) sum += words[j];
                expected.insert(sum);
            }
            std::set<std::uint64_t> got;
            for (const BigNat& v : fs_exact(H, a)) got.insert(v.to_uint64());
            CHECK(got == expected);
        }
    }
}

TEST_CASE("counting law: |FS^{=a}(H)| = C(|H|, a)") {
    testutil::Rng rng(4);
    for (int i = 0; i < 120; ++i) {
        ApartSet H = testutil::random_apart_set(rng, 1 + i % 8);
        for (SumLength a = 1; a <= H.size(); ++a)
            CHECK(fs_exact(H, a).size() == testutil::binomial(H.size(), a));
    }
}

TEST_CASE("sum profile law: lambda and mu of sums come from the extremes") {
    testutil::Rng rng(5);
    for (int i = 0; i < 120; ++i) {
        ApartSet H = testutil::random_apart_set(rng, 1 + i % 6);
        std::size_t g = H.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g); ++mask) {
            BigNat sum;
            std::size_t lo = g, hi = 0;
            for (std::size_t j = 0; j < g; ++j) {
                if (mask >> j & 1) {
                    sum += H[j];
                    lo = std::min(lo, j);
                    hi = std::max(hi, j);
                }
            }
            CHECK(lambda(sum) == lambda(H[lo]));
            CHECK(mu(sum) == mu(H[hi]));
        }
    }
}

TEST_CASE("fs monotonicity in lengths and ground") {
    testutil::Rng rng(6);
    auto subset_of = [](const std::set<BigNat>& small, const std::set<BigNat>& big) {
        for (const BigNat& v : small)
            if (!big.count(v)) return false;
        return true;
    };
    for (int i = 0; i < 60; ++i) {
        ApartSet H2 = testutil::random_apart_set(rng, 3 + i % 5);
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < H2.size(); ++j)
            if (testutil::pick(rng, 0, 1)) idx.push_back(j);
        ApartSet H1 = H2.subset(idx);

        std::set<SumLength> A1{1, 2};
        std::set<SumLength> A2{1, 2, 3};
        CHECK(subset_of(fs_lengths(H2, A1), fs_lengths(H2, A2)));
        if (!H1.empty())
            CHECK(subset_of(fs_exact(H1, 2), fs_exact(H2, 2)));
    }
}

TEST_CASE("instantiate_pattern on the worked examples") {
    CHECK(instantiate_pattern(LengthPattern::brauer(3, 1), PatternParams::ab(1, 1)) ==
          std::set<SumLength>{1, 2, 3});
    CHECK(instantiate_pattern(LengthPattern::schur(), PatternParams::ab(2, 3)) ==
          std::set<SumLength>{2, 3, 5});
    CHECK(instantiate_pattern(LengthPattern::folkman(2), PatternParams::folkman({1, 2})) ==
          std::set<SumLength>{1, 2, 3});
    CHECK(instantiate_pattern(LengthPattern::vdw(4), PatternParams::ab(2, 3)) ==
          std::set<SumLength>{2, 5, 8, 11});
    CHECK(instantiate_pattern(LengthPattern::explicit_set({4, 9}), PatternParams::none()) ==
          std::set<SumLength>{4, 9});

    CHECK_THROWS_AS(instantiate_pattern(LengthPattern::schur(), PatternParams::none()),
                    std::domain_error);
    CHECK_THROWS_AS(instantiate_pattern(LengthPattern::folkman(2), PatternParams::folkman({2, 1})),
                    std::domain_error);
    CHECK_THROWS_AS(instantiate_pattern(LengthPattern::folkman(2), PatternParams::folkman({3})),
                    std::domain_error);
    // a == b is allowed by default and collapses; the flag rejects it.
    CHECK(instantiate_pattern(LengthPattern::schur(), PatternParams::ab(2, 2)) ==
          std::set<SumLength>{2, 4});
    CHECK_THROWS_AS(instantiate_pattern(LengthPattern::schur(), PatternParams::ab(2, 2), true),
                    std::domain_error);
}

TEST_CASE("pattern spec strings parse and print") {
    for (const char* text : {"schur", "vdw:3", "brauer:3:1", "folkman:2", "explicit:1,2,5"}) {
        CHECK(LengthPattern::parse(text).to_string() == text);
    }
    CHECK_THROWS_WITH_AS(LengthPattern::parse("vdw:zero"),
                         doctest::Contains("zero"), std::domain_error);
    CHECK_THROWS_AS(LengthPattern::parse("hindman"), std::domain_error);
    CHECK_THROWS_AS(LengthPattern::parse("brauer:3"), std::domain_error);
    CHECK_THROWS_AS(LengthPattern::parse("explicit:"), std::domain_error);
    CHECK_THROWS_AS(LengthPattern::parse("schur:1"), std::domain_error);
}

TEST_CASE("colorings are total on their domain and nowhere else") {
    Coloring parity = parity_coloring();
    CHECK(parity.at(nat(7)) == 1);
    CHECK(parity.at(nat(8)) == 0);
    CHECK_THROWS_AS(parity.at(nat(0)), std::domain_error);

    Coloring pop = popcount_parity_coloring();
    CHECK(pop.at(nat(7)) == 1);
    CHECK(pop.at(nat(10)) == 0);

    Coloring constant = constant_coloring(2, 0);
    CHECK(constant.at(nat(123)) == 0);
    CHECK_THROWS_AS(constant_coloring(2, 2), std::domain_error);

    Coloring bounded(2, [](const BigNat&) { return 0u; }, nat(5), "small");
    CHECK(bounded.at(nat(5)) == 0);
    CHECK_THROWS_AS(bounded.at(nat(6)), std::domain_error);
}
