#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "hindman/apartness.hpp"
#include "hindman/finite_sums.hpp"
#include "hindman/lowerbound/schedule.hpp"

namespace hindman::lowerbound {

/// Everything the decoding algorithm needs: the solution set H, the sum
/// lengths a and b of its certificate, and the staged enumeration. |H| must
/// be at least a + b so that suitably ordered sums exist at all.
///
/// JSON form: {"H": ["4", "32"], "a": 1, "b": 1, "schedule_ref": "k.sched"}
/// (schedule_ref names the schedule file; the schedule itself is attached
/// after loading).
struct DecodingContext {
    ApartSet H;
    SumLength a = 0;
    SumLength b = 0;
    EnumerationSchedule schedule;

    /// Validates a, b >= 1 and |H| >= a + b.
    static DecodingContext make(ApartSet H, SumLength a, SumLength b,
                                EnumerationSchedule schedule);
};

std::string decoding_context_to_json(const DecodingContext& ctx, const std::string& schedule_ref);

struct ParsedDecodingContext {
    ApartSet H;
    SumLength a = 0;
    SumLength b = 0;
    std::string schedule_ref;
};

ParsedDecodingContext decoding_context_from_json(const std::string& text);

/// Raised when the finite H cannot supply the sums the algorithm asks for.
/// An infinite solution set always can; a bounded one may run out of room.
class InsufficientWitnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DecodeOutcome {
    bool member = false;
    BigNat m;
    BigNat n;
    std::uint64_t lambda_n = 0;
};

/// Membership of x in K, decided from the solution set alone: take the least
/// m in FS^{=a}(H) with x <= mu(m), then the least n in FS^{=b}(H) with m < n
/// and mu(m) < lambda(n), and answer whether x is enumerated within lambda(n)
/// stages. On a genuine solution for the very-short-gap parity coloring this
/// equals true membership. Throws InsufficientWitnessError when no admissible
/// (m, n) exists inside H.
DecodeOutcome decode(const DecodingContext& ctx, std::uint64_t x);

}  // namespace hindman::lowerbound
