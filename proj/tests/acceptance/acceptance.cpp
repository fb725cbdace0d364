// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Run a single criterion with --only <k>, everything by default.

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "cli/cli.hpp"
#include "hindman/apartness.hpp"
#include "hindman/bit_profile.hpp"
#include "hindman/finite_sums.hpp"
#include "hindman/lowerbound/claims.hpp"
#include "hindman/lowerbound/decode.hpp"
#include "hindman/lowerbound/gaps.hpp"
#include "hindman/oracles/mono_search.hpp"
#include "hindman/oracles/witness.hpp"
#include "hindman/solver/solution_io.hpp"
#include "hindman/solver/solve.hpp"
#include "../test_util.hpp"

using namespace hindman;
using namespace std::chrono;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(steady_clock::time_point t0) {
    return duration_cast<duration<double>>(steady_clock::now() - t0).count();
}

// ----------------------------------------------------------------- C1 ----
// Schur witness through the CLI surface: exactly 5, certificate avoids on
// [1,4] and re-verifies, under a second.
Outcome criterion1() {
    auto t0 = steady_clock::now();
    cli::Command cmd = cli::parse_command({"witness", "--pattern", "schur", "--colors", "2"});
    cli::Report report = cli::execute(cmd);
    double secs = seconds_since(t0);

    if (report.status != cli::ReportStatus::ok) return {false, "status not ok"};
    if (report.payload["value"] != 5) return {false, "value != 5"};
    if (report.payload["exact"] != true) return {false, "not exact"};
    oracles::TableColoring cert =
        oracles::TableColoring::parse(report.payload["certificate"].get<std::string>() + "\n");
    if (cert.size() != 4) return {false, "certificate not on [1,4]"};
    if (!oracles::is_avoiding(cert, LengthPattern::schur())) return {false, "certificate not avoiding"};
    if (secs >= 1.0) return {false, "runtime " + std::to_string(secs) + "s >= 1s"};
    std::ostringstream os;
    os << "S(2) = 5, certificate avoids on [1,4], " << secs << "s";
    return {true, os.str()};
}

// ----------------------------------------------------------------- C2 ----
// Van der Waerden witness: exactly 9 with a verified avoider on [1,8];
// the published avoider 0 0 1 1 0 0 1 1 checks out too.
Outcome criterion2() {
    auto t0 = steady_clock::now();
    cli::Report report = cli::execute(
        cli::parse_command({"witness", "--pattern", "vdw:3", "--colors", "2", "--max", "12"}));
    double secs = seconds_since(t0);

    if (report.status != cli::ReportStatus::ok) return {false, "status not ok"};
    if (report.payload["value"] != 9) return {false, "value != 9"};
    oracles::TableColoring cert =
        oracles::TableColoring::parse(report.payload["certificate"].get<std::string>() + "\n");
    if (cert.size() != 8) return {false, "certificate not on [1,8]"};
    if (!oracles::is_avoiding(cert, LengthPattern::vdw(3))) return {false, "certificate not avoiding"};
    oracles::TableColoring reference(2, {0, 0, 1, 1, 0, 0, 1, 1});
    if (!oracles::is_avoiding(reference, LengthPattern::vdw(3)))
        return {false, "reference avoider rejected"};
    if (cert.table() != reference.table()) return {false, "unexpected non-canonical certificate"};
    if (secs >= 5.0) return {false, "runtime " + std::to_string(secs) + "s >= 5s"};
    std::ostringstream os;
    os << "W(2,3) = 9, certificate 0 0 1 1 0 0 1 1 avoids, " << secs << "s";
    return {true, os.str()};
}

// ----------------------------------------------------------------- C3 ----
// The Brauer number B(2,3,1): both strategies agree exactly, the avoiding
// certificate re-verifies, and forcing is spot-checked on random tables.
// No externally assumed value; dual-strategy agreement is the oracle.
Outcome criterion3() {
    auto t0 = steady_clock::now();
    LengthPattern pattern = LengthPattern::brauer(3, 1);
    oracles::WitnessResult dfs = oracles::witness_number(
        pattern, 2, 24, oracles::SearchStrategy::incremental_dfs, {UINT64_MAX, 2});
    oracles::WitnessResult full = oracles::witness_number(
        pattern, 2, 24, oracles::SearchStrategy::full_enumeration, {UINT64_MAX, 2});
    double secs = seconds_since(t0);

    if (dfs.status != oracles::WitnessStatus::exact) return {false, "dfs did not reach an exact value"};
    if (full.status != oracles::WitnessStatus::exact)
        return {false, "full enumeration did not reach an exact value"};
    if (dfs.value != full.value)
        return {false, "strategies disagree: " + std::to_string(dfs.value) + " vs " +
                           std::to_string(full.value)};
    if (dfs.certificate.size() != dfs.value - 1) return {false, "certificate length mismatch"};
    if (!oracles::is_avoiding(dfs.certificate, pattern)) return {false, "dfs certificate not avoiding"};
    if (!oracles::is_avoiding(full.certificate, pattern))
        return {false, "enumeration certificate not avoiding"};

    testutil::Rng rng(33);
    for (int i = 0; i < 500; ++i) {
        std::vector<Color> t(dfs.value);
        for (auto& c : t) c = static_cast<Color>(testutil::pick(rng, 0, 1));
        if (!oracles::find_mono_config(oracles::TableColoring(2, t), pattern))
            return {false, "random coloring of [1, value] avoided the pattern"};
    }
    if (secs >= 300.0) return {false, "runtime " + std::to_string(secs) + "s >= 300s"};
    std::ostringstream os;
    os << "B(2,3,1) = " << dfs.value << " by both strategies, certificate avoids on [1,"
       << dfs.value - 1 << "], " << secs << "s";
    return {true, os.str()};
}

// ----------------------------------------------------------------- C4 ----
// Core laws on 1000 random apart sets: counting |FS^{=a}| = C(|H|, a) and
// the lambda/mu projections of every subset sum.
Outcome criterion4() {
    testutil::Rng rng(44);
    std::uint64_t sums_checked = 0;
    for (int i = 0; i < 1000; ++i) {
        ApartSet H = testutil::random_apart_set(rng, 1 + i % 9);
        for (SumLength a = 1; a <= H.size(); ++a) {
            if (fs_exact(H, a).size() != testutil::binomial(H.size(), a))
                return {false, "counting law failed at set " + std::to_string(i)};
        }
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
            ++sums_checked;
            if (lambda(sum) != lambda(H[lo]) || mu(sum) != mu(H[hi]))
                return {false, "sum profile law failed at set " + std::to_string(i)};
        }
    }
    return {true, "1000 apart sets, " + std::to_string(sums_checked) +
                      " sums: counting and lambda/mu laws hold"};
}

// ----------------------------------------------------------------- C5 ----
// The sum identity under the largeness conditions, 10^4 conditioned triples;
// plus VSG containment in SG on 10^4 random pairs.
Outcome criterion5() {
    testutil::Rng rng(55);
    int conditioned = 0;
    std::uint64_t attempts = 0;
    while (conditioned < 10000) {
        if (++attempts > 5'000'000) return {false, "generator failed to reach 10^4 conditioned triples"};
        lowerbound::EnumerationSchedule s = testutil::random_schedule(rng, 5, 30, 12);
        BigNat m = testutil::random_positive(rng, testutil::pick(rng, 0, 10));
        std::uint64_t shift = mu(m) + 1 + testutil::pick(rng, 0, 25);
        std::vector<std::uint64_t> nexps;
        std::uint64_t e = shift;
        std::uint64_t bits = testutil::pick(rng, 1, 4);
        for (std::uint64_t b = 0; b < bits; ++b) {
            nexps.push_back(e);
            e += 1 + testutil::pick(rng, 0, 4);
        }
        BigNat n = BigNat::from_exponents(nexps);
        lowerbound::SumIdentityReport r = lowerbound::check_sum_identity(m, n, s);
        if (!r.conditions.all()) continue;
        ++conditioned;
        if (!r.holds)
            return {false, "identity failed for m=" + m.to_decimal() + " n=" + n.to_decimal()};
    }

    for (int i = 0; i < 10000; ++i) {
        lowerbound::EnumerationSchedule s = testutil::random_schedule(rng, 6, 40, 16);
        BigNat n = testutil::random_positive(rng, 48);
        lowerbound::GapClassification g = lowerbound::classify_gaps(n, s);
        for (const Gap& gap : g.very_short_gaps) {
            if (!g.short_gaps.count(gap)) return {false, "VSG not contained in SG"};
        }
    }
    std::ostringstream os;
    os << "10^4 conditioned triples hold the identity (" << attempts
       << " samples drawn), 10^4 containment checks pass";
    return {true, os.str()};
}

// -------------------------------------------------------------- C6, C7 ----
// End-to-end reproduction: random schedules (elements < 16, stages inside
// the ground exponent range), direct solve of brauer:3:1 under the
// very-short-gap parity coloring, then decode every x < 16 against true
// membership. A finite ground can leave the decoder's canonical (m, n) pair
// unprotected by the evenness of the short-gap counts; such runs fall back
// to the same ground window lifted above every stage, where decoding is
// exact unconditionally, and must then decode perfectly.
struct EndToEnd {
    bool solved = false;
    bool decoded = false;
    bool escalated = false;
    solver::Solution solution;
    lowerbound::EnumerationSchedule schedule;
    double solve_seconds = 0;
};

EndToEnd run_end_to_end(const lowerbound::EnumerationSchedule& schedule, unsigned workers) {
    EndToEnd out;
    out.schedule = schedule;
    for (int attempt = 0; attempt < 2; ++attempt) {
        Coloring c = lowerbound::vsg_coloring(schedule);
        solver::SolveConfig cfg;
        cfg.mode = solver::SolveMode::direct;
        cfg.ground = attempt == 0 ? apart_ground(16, 0, 6) : apart_ground(16, 31, 6);
        cfg.target_size = 6;
        cfg.workers = workers;
        auto t0 = steady_clock::now();
        solver::SolveOutcome solved = solver::solve(c, LengthPattern::brauer(3, 1), cfg);
        out.solve_seconds = seconds_since(t0);
        if (solved.status != solver::SolveStatus::found) continue;
        if (!solver::verify_solution(c, *solved.solution).ok) continue;
        out.solved = true;
        out.solution = *solved.solution;

        lowerbound::DecodingContext ctx = lowerbound::DecodingContext::make(
            out.solution.H, out.solution.params.a, out.solution.params.b, schedule);
        bool all_exact = true;
        for (std::uint64_t x = 0; x < 16 && all_exact; ++x) {
            try {
                all_exact = lowerbound::decode(ctx, x).member == schedule.in_k(x);
            } catch (const lowerbound::InsufficientWitnessError&) {
                all_exact = false;
            }
        }
        if (all_exact) {
            out.decoded = true;
            out.escalated = attempt > 0;
            return out;
        }
    }
    return out;
}

std::vector<lowerbound::EnumerationSchedule> end_to_end_schedules() {
    testutil::Rng rng(66);
    std::vector<lowerbound::EnumerationSchedule> out;
    for (int i = 0; i < 50; ++i)
        out.push_back(testutil::random_schedule(rng, 4 + i % 5, 30, 16));
    return out;
}

Outcome criterion6() {
    int escalations = 0;
    double worst = 0;
    for (const auto& schedule : end_to_end_schedules()) {
        EndToEnd e = run_end_to_end(schedule, 2);
        if (!e.solved) return {false, "no verified solution for a schedule"};
        if (!e.decoded) return {false, "decode mismatch persisted after ground enlargement"};
        if (e.solve_seconds > 120.0) return {false, "a schedule exceeded the per-run budget"};
        worst = std::max(worst, e.solve_seconds);
        if (e.escalated) ++escalations;
    }
    std::ostringstream os;
    os << "50 schedules solved and decoded exactly (x < 16); " << escalations
       << " used the lifted-ground fallback; worst solve " << worst << "s";
    return {true, os.str()};
}

Outcome criterion7() {
    std::uint64_t checked = 0, skipped = 0;
    int vacuous = 0;
    for (const auto& schedule : end_to_end_schedules()) {
        EndToEnd e = run_end_to_end(schedule, 2);
        if (!e.solved || !e.decoded) return {false, "end-to-end run failed"};
        lowerbound::ParityCheckOutcome parity = lowerbound::claims_parity_check(
            e.solution.H, e.solution.params.a, e.solution.params.b, e.schedule);
        if (!parity.ok()) {
            // Documented fallback: enlarge and re-check; the lifted window
            // must pass.
            EndToEnd lifted = run_end_to_end(e.schedule, 2);
            if (!lifted.escalated) return {false, "parity violation without usable fallback"};
            lowerbound::ParityCheckOutcome again = lowerbound::claims_parity_check(
                lifted.solution.H, lifted.solution.params.a, lifted.solution.params.b,
                lifted.schedule);
            if (!again.ok()) return {false, "parity violation persisted after enlargement"};
        }
        checked += parity.checked;
        skipped += parity.skipped_no_partner;
        if (parity.checked == 0) ++vacuous;
    }
    std::ostringstream os;
    os << "|SG(m)| even for every partnered m: " << checked << " sums checked, " << skipped
       << " skipped without partner (" << vacuous << " runs fully unpartnered), 0 violations";
    return {true, os.str()};
}

// ----------------------------------------------------------------- C8 ----
// Pipeline-mode sanity at the Schur core: stagewise refinement over a
// popcount-style coloring, and the induced length coloring reproduces the
// directly evaluated one.
Outcome criterion8() {
    auto t0 = steady_clock::now();
    Coloring c = popcount_parity_coloring();
    solver::SolveConfig cfg;
    cfg.mode = solver::SolveMode::iterated;
    cfg.ground = apart_ground(12, 0, 1);
    solver::SolveOutcome out = solver::solve(c, LengthPattern::schur(), cfg);
    double secs = seconds_since(t0);

    if (out.status != solver::SolveStatus::found) return {false, "iterated solve failed"};
    if (out.core_k != 5) return {false, "Schur core k != 5"};
    if (!solver::verify_solution(c, *out.solution).ok) return {false, "solution failed verification"};

    // Directly evaluate the induced coloring C(i) = color of any i-element
    // sum (well-defined here: the color depends only on the summand count).
    std::vector<Color> induced;
    for (SumLength i = 1; i <= 5; ++i)
        induced.push_back(c.at(*fs_exact(cfg.ground, i).begin()));
    auto witness = oracles::find_mono_config(oracles::TableColoring(2, induced),
                                             LengthPattern::schur());
    if (!witness) return {false, "induced coloring has no Schur configuration"};
    if (!(witness->params == out.solution->params))
        return {false, "induced-coloring parameters differ from the solution's"};
    if (secs >= 30.0) return {false, "runtime " + std::to_string(secs) + "s >= 30s"};
    std::ostringstream os;
    os << "iterated refinement at k=5 verified; induced C gives (a,b)=(" << witness->params.a
       << "," << witness->params.b << ") matching the solution, " << secs << "s";
    return {true, os.str()};
}

// ----------------------------------------------------------------- C9 ----
// Determinism: the reports backing criteria 1-8 are byte-identical under
// 1 and 8 workers.
Outcome criterion9() {
    auto report_bytes = [](std::vector<std::string> args, unsigned workers) {
        args.push_back("--workers");
        args.push_back(std::to_string(workers));
        return cli::execute(cli::parse_command(args)).to_json();
    };
    std::vector<std::vector<std::string>> cli_cases = {
        {"witness", "--pattern", "schur", "--colors", "2"},
        {"witness", "--pattern", "vdw:3", "--colors", "2", "--max", "12"},
        {"witness", "--pattern", "brauer:3:1", "--colors", "2", "--max", "24"},
        {"witness", "--pattern", "brauer:3:1", "--colors", "2", "--max", "24", "--strategy",
         "full"},
    };
    for (const auto& args : cli_cases) {
        if (report_bytes(args, 1) != report_bytes(args, 8))
            return {false, "witness report differs across worker counts"};
    }

    auto schedules = end_to_end_schedules();
    for (int i : {0, 1, 3}) {
        EndToEnd one = run_end_to_end(schedules[i], 1);
        EndToEnd eight = run_end_to_end(schedules[i], 8);
        if (!one.solved || !eight.solved) return {false, "end-to-end run failed"};
        std::string doc1 = solver::solution_to_json(one.solution, "vsg", true, "direct", 0);
        std::string doc8 = solver::solution_to_json(eight.solution, "vsg", true, "direct", 0);
        if (doc1 != doc8) return {false, "solution documents differ across worker counts"};
        if (one.escalated != eight.escalated) return {false, "fallback behavior differs"};
    }

    auto solve_bytes = [](unsigned workers) {
        solver::SolveConfig cfg;
        cfg.mode = solver::SolveMode::iterated;
        cfg.ground = apart_ground(12, 0, 1);
        cfg.workers = workers;
        solver::SolveOutcome out = solver::solve(popcount_parity_coloring(), LengthPattern::schur(), cfg);
        if (out.status != solver::SolveStatus::found) return std::string("failed");
        return solver::solution_to_json(*out.solution, "popcount-parity", true, "iterated",
                                        out.steps_used);
    };
    if (solve_bytes(1) != solve_bytes(8)) return {false, "iterated solve differs across workers"};
    return {true, "witness, solve and decode outputs byte-identical at 1 and 8 workers"};
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
    }
    struct Criterion {
        int number;
        const char* title;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "Schur witness", criterion1},
        {2, "Van der Waerden witness", criterion2},
        {3, "Brauer number dual-strategy", criterion3},
        {4, "core laws", criterion4},
        {5, "sum identity engine", criterion5},
        {6, "end-to-end decode", criterion6},
        {7, "claims parity", criterion7},
        {8, "pipeline sanity", criterion8},
        {9, "worker determinism", criterion9},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.number != only) continue;
        Outcome outcome = c.run();
        std::cout << "C" << c.number << (outcome.pass ? " PASS" : " FAIL") << " (" << c.title
                  << "): " << outcome.detail << "\n";
        if (!outcome.pass) ++failures;
    }
    return failures;
}
