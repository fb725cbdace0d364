#include "hindman/lowerbound/claims.hpp"

#include <stdexcept>

#include "hindman/lowerbound/gaps.hpp"

namespace hindman::lowerbound {

LargenessConditions largeness_conditions(const BigNat& m, const BigNat& n,
                                         const EnumerationSchedule& schedule) {
    if (m.is_zero() || n.is_zero())
        throw std::domain_error("largeness_conditions: m and n must be >= 1");
    LargenessConditions out;
    std::uint64_t mu_m = mu(m);
    std::uint64_t lambda_n = lambda(n);
    out.mu_below_lambda = mu_m < lambda_n;
    out.membership_settled = true;
    for (const auto& entry : schedule.entries()) {
        if (entry.element > mu_m) continue;
        if (!schedule.in_k_at(entry.element, lambda_n)) {
            out.membership_settled = false;
            break;
        }
    }
    out.mu_sum_preserved = mu(m + n) == mu(n);
    return out;
}

SumIdentityReport check_sum_identity(const BigNat& m, const BigNat& n,
                                     const EnumerationSchedule& schedule) {
    if (m.is_zero() || n.is_zero())
        throw std::domain_error("check_sum_identity: m and n must be >= 1");
    if (mu(m) >= lambda(n))
        throw std::domain_error("check_sum_identity: mu(m) >= lambda(n) would merge bit supports");

    SumIdentityReport report;
    report.conditions = largeness_conditions(m, n, schedule);
    report.vsg_sum = classify_gaps(m + n, schedule).very_short_gaps;
    report.sg_m = classify_gaps(m, schedule).short_gaps;
    report.vsg_n = classify_gaps(n, schedule).very_short_gaps;

    Gap connecting{mu(m), lambda(n)};
    std::set<Gap> expected = report.sg_m;
    expected.insert(report.vsg_n.begin(), report.vsg_n.end());
    report.holds = report.vsg_sum == expected && !report.vsg_sum.count(connecting);
    return report;
}

namespace {

// Is there an n in `partners` strictly above m satisfying all three
// largeness conditions?
bool has_partner(const BigNat& m, const std::set<BigNat>& partners,
                 const EnumerationSchedule& schedule) {
    std::uint64_t mu_m = mu(m);
    for (const BigNat& n : partners) {
        if (lambda(n) <= mu_m) continue;
        if (largeness_conditions(m, n, schedule).all()) return true;
    }
    return false;
}

}  // namespace

ParityCheckOutcome claims_parity_check(const ApartSet& H, SumLength a, SumLength b,
                                       const EnumerationSchedule& schedule) {
    ParityCheckOutcome out;
    std::set<BigNat> fs_a = fs_exact(H, a);
    std::set<BigNat> fs_b = fs_exact(H, b);
    std::set<BigNat> fs_ab = fs_exact(H, a + b);

    struct Family {
        const std::set<BigNat>* members;
        const std::set<BigNat>* partners;
    };
    const Family families[3] = {{&fs_a, &fs_b}, {&fs_b, &fs_a}, {&fs_ab, &fs_b}};

    for (const Family& family : families) {
        for (const BigNat& m : *family.members) {
            if (!has_partner(m, *family.partners, schedule)) {
                ++out.skipped_no_partner;
                continue;
            }
            ++out.checked;
            if (classify_gaps(m, schedule).short_gaps.size() % 2 != 0) out.violations.push_back(m);
        }
    }
    return out;
}

}  // namespace hindman::lowerbound
