#include <benchmark/benchmark.h>

#include <random>

#include "hindman/apartness.hpp"
#include "hindman/bit_profile.hpp"
#include "hindman/finite_sums.hpp"
#include "hindman/lowerbound/gaps.hpp"
#include "hindman/lowerbound/schedule.hpp"
#include "hindman/oracles/witness.hpp"
#include "hindman/solver/solve.hpp"

using namespace hindman;

namespace {

BigNat wide_number(std::uint64_t bits, std::uint64_t stride) {
    std::vector<std::uint64_t> exps;
    for (std::uint64_t i = 0; i < bits; ++i) exps.push_back(i * stride);
    return BigNat::from_exponents(exps);
}

lowerbound::EnumerationSchedule bench_schedule() {
    return lowerbound::EnumerationSchedule(
        {{3, 1}, {7, 4}, {11, 0}, {19, 9}, {26, 2}, {30, 12}});
}

void bignat_addition(benchmark::State& state) {
    BigNat a = wide_number(static_cast<std::uint64_t>(state.range(0)), 7);
    BigNat b = wide_number(static_cast<std::uint64_t>(state.range(0)), 11);
    for (auto _ : state) {
        BigNat c = a + b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(bignat_addition)->Arg(8)->Arg(64)->Arg(512);

void profile_decomposition(benchmark::State& state) {
    BigNat n = wide_number(static_cast<std::uint64_t>(state.range(0)), 5);
    for (auto _ : state) {
        BitProfile p = bit_profile(n);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(profile_decomposition)->Arg(8)->Arg(64)->Arg(512);

void fs_exact_enumeration(benchmark::State& state) {
    ApartSet H = apart_ground(static_cast<std::size_t>(state.range(0)), 0, 3);
    for (auto _ : state) {
        auto sums = fs_exact(H, 3);
        benchmark::DoNotOptimize(sums);
    }
}
BENCHMARK(fs_exact_enumeration)->Arg(8)->Arg(12)->Arg(16);

void witness_schur_dfs(benchmark::State& state) {
    for (auto _ : state) {
        auto r = oracles::witness_number(LengthPattern::schur(), 2, 10,
                                         oracles::SearchStrategy::incremental_dfs);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(witness_schur_dfs);

void witness_brauer(benchmark::State& state) {
    auto strategy = state.range(0) == 0 ? oracles::SearchStrategy::incremental_dfs
                                        : oracles::SearchStrategy::full_enumeration;
    for (auto _ : state) {
        auto r = oracles::witness_number(LengthPattern::brauer(3, 1), 2, 20, strategy);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(witness_brauer)->Arg(0)->Arg(1);

void vsg_color_evaluation(benchmark::State& state) {
    lowerbound::EnumerationSchedule sched = bench_schedule();
    BigNat n = wide_number(static_cast<std::uint64_t>(state.range(0)), 6);
    for (auto _ : state) {
        Color c = lowerbound::vsg_color(sched, n);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(vsg_color_evaluation)->Arg(4)->Arg(8)->Arg(16);

void direct_solve_vsg(benchmark::State& state) {
    lowerbound::EnumerationSchedule sched = bench_schedule();
    Coloring c = lowerbound::vsg_coloring(sched);
    for (auto _ : state) {
        solver::SolveConfig cfg;
        cfg.mode = solver::SolveMode::direct;
        cfg.ground = apart_ground(16, 0, 6);
        cfg.target_size = 6;
        cfg.workers = static_cast<unsigned>(state.range(0));
        auto out = solver::solve(c, LengthPattern::brauer(3, 1), cfg);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(direct_solve_vsg)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
