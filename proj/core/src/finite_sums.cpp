#include "hindman/finite_sums.hpp"

#include <stdexcept>

namespace hindman {

namespace {

void combine(const ApartSet& H, std::size_t next, SumLength remaining, BigNat& acc,
             std::set<BigNat>& out) {
    if (remaining == 0) {
        out.insert(acc);
        return;
    }
    // Not enough elements left to reach the target length.
    if (H.size() - next < remaining) return;
    for (std::size_t i = next; i + remaining <= H.size(); ++i) {
        BigNat sum = acc + H[i];
        std::swap(acc, sum);
        combine(H, i + 1, remaining - 1, acc, out);
        std::swap(acc, sum);
    }
}

}  // namespace

std::set<BigNat> fs_exact(const ApartSet& H, SumLength a) {
    if (a == 0) throw std::domain_error("fs_exact: only non-empty sums are considered (a >= 1)");
    std::set<BigNat> out;
    if (a > H.size()) return out;
    BigNat acc;
    combine(H, 0, a, acc, out);
    return out;
}

std::set<BigNat> fs_lengths(const ApartSet& H, const std::set<SumLength>& A) {
    if (A.empty()) throw std::domain_error("fs_lengths: length set A must be non-empty");
    std::set<BigNat> out;
    for (SumLength a : A) {
        std::set<BigNat> part = fs_exact(H, a);
        out.merge(part);
    }
    return out;
}

}  // namespace hindman
