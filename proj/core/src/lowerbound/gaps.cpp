#include "hindman/lowerbound/gaps.hpp"

namespace hindman::lowerbound {

GapClassification classify_gaps(const BigNat& n, const EnumerationSchedule& schedule) {
    BitProfile profile = bit_profile(n);
    GapClassification out;
    out.n = n;
    for (const Gap& gap : profile.gaps) {
        bool is_short = false;
        bool is_very_short = false;
        for (const auto& entry : schedule.entries()) {
            if (entry.element > gap.first) continue;  // needs x <= lower end
            bool beyond_hi = !schedule.in_k_at(entry.element, gap.second);
            if (!beyond_hi) continue;
            is_short = true;
            if (schedule.in_k_at(entry.element, profile.mu)) is_very_short = true;
        }
        if (is_short) out.short_gaps.insert(gap);
        if (is_very_short) out.very_short_gaps.insert(gap);
    }
    return out;
}

Color vsg_color(const EnumerationSchedule& schedule, const BigNat& n) {
    return static_cast<Color>(classify_gaps(n, schedule).very_short_gaps.size() & 1);
}

Coloring vsg_coloring(const EnumerationSchedule& schedule, const std::string& ref) {
    return Coloring(
        2, [schedule](const BigNat& n) { return vsg_color(schedule, n); }, std::nullopt, ref);
}

}  // namespace hindman::lowerbound
