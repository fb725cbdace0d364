#include "hindman/solver/solve.hpp"

#include <algorithm>
#include <stdexcept>

#include "hindman/detail/waves.hpp"
#include "hindman/finite_sums.hpp"
#include "hindman/oracles/mono_search.hpp"
#include "hindman/oracles/witness.hpp"
#include "hindman/solver/homogeneous.hpp"
#include "hindman/solver/tuple_coloring.hpp"

namespace hindman::solver {

namespace {

constexpr std::size_t kWaveWidth = 8;
constexpr Color kNoColor = static_cast<Color>(-1);

enum class Walk { done, found, budget_cut };

struct ParamCandidate {
    PatternParams params;
    std::vector<SumLength> lengths;  // ascending
};

// All admissible parameter choices for sets of `target` elements, canonical
// order. The enumerator's [1, n] bound is exactly the max(A) <= |H| bound.
std::vector<ParamCandidate> admissible_candidates(const LengthPattern& pattern,
                                                  std::size_t target) {
    std::vector<ParamCandidate> out;
    oracles::for_each_params_within(
        pattern, static_cast<std::uint32_t>(target),
        [&](const PatternParams& params, const std::vector<std::uint32_t>& instance) {
            ParamCandidate cand;
            cand.params = params;
            cand.lengths.assign(instance.begin(), instance.end());
            out.push_back(std::move(cand));
            return false;
        });
    return out;
}

struct DirectShardResult {
    bool found = false;
    std::vector<std::size_t> subset;
    std::size_t candidate = 0;
    Color color = 0;
    bool exhausted = true;
    std::uint64_t steps = 0;
    std::uint64_t domain_misses = 0;
};

// Exhaustive walk over size-`target` subsets of the ground in lexicographic
// order. Every parameter candidate is tracked along the branch: the sums a
// new element completes are colored immediately, a candidate dies on the
// first clash, and the branch is abandoned once no candidate survives. At
// full depth surviving candidates are fully certified by construction.
class DirectSearch {
public:
    DirectSearch(const Coloring& coloring, const ApartSet& ground,
                 const std::vector<ParamCandidate>& candidates, std::size_t target,
                 std::uint64_t budget)
        : coloring_(coloring), ground_(ground), candidates_(candidates), target_(target),
          budget_(budget) {}

    Walk run(std::size_t first_index, DirectShardResult& res) {
        chosen_.clear();
        std::vector<char> alive(candidates_.size(), 1);
        std::vector<Color> sigma(candidates_.size(), kNoColor);
        return descend(first_index, first_index + 1, alive, sigma, res);
    }

private:
    struct LengthOutcome {
        bool domain_miss = false;
        bool mixed = false;
        Color color = kNoColor;
    };

    // Colors of the sums the newest element completes for length j: the
    // (j-1)-subsets of the earlier choices plus the new element.
    LengthOutcome color_new_sums(SumLength j, DirectShardResult& res) {
        LengthOutcome out;
        const BigNat& fresh = ground_[chosen_.back()];
        std::size_t prev = chosen_.size() - 1;
        std::vector<std::size_t> pick;
        std::function<bool(std::size_t, SumLength)> rec = [&](std::size_t start,
                                                              SumLength remaining) -> bool {
            if (remaining == 0) {
                BigNat sum = fresh;
                for (std::size_t idx : pick) sum += ground_[idx];
                ++res.steps;
                if (!coloring_.in_domain(sum)) {
                    out.domain_miss = true;
                    ++res.domain_misses;
                    return false;
                }
                Color c = coloring_.at(sum);
                if (out.color == kNoColor) out.color = c;
                else if (out.color != c) {
                    out.mixed = true;
                    return false;
                }
                return true;
            }
            for (std::size_t i = start; i + remaining <= prev; ++i) {
                pick.push_back(chosen_[i]);
                bool keep = rec(i + 1, remaining - 1);
                pick.pop_back();
                if (!keep) return false;
            }
            return true;
        };
        rec(0, j - 1);
        return out;
    }

    // Updates candidate states for the newest element; false when the branch
    // is dead.
    bool apply_element(std::vector<char>& alive, std::vector<Color>& sigma,
                       DirectShardResult& res) {
        std::size_t p = chosen_.size();
        // Outcomes are shared across candidates, computed lazily per length.
        std::vector<char> have(target_ + 1, 0);
        std::vector<LengthOutcome> outcome(target_ + 1);
        bool any = false;
        for (std::size_t ci = 0; ci < candidates_.size(); ++ci) {
            if (!alive[ci]) continue;
            for (SumLength j : candidates_[ci].lengths) {
                if (j > p) break;
                if (!have[j]) {
                    outcome[j] = color_new_sums(j, res);
                    have[j] = 1;
                }
                const LengthOutcome& o = outcome[j];
                if (o.domain_miss || o.mixed) {
                    alive[ci] = 0;
                    break;
                }
                if (sigma[ci] == kNoColor) sigma[ci] = o.color;
                else if (sigma[ci] != o.color) {
                    alive[ci] = 0;
                    break;
                }
            }
            any = any || alive[ci];
        }
        return any;
    }

    Walk descend(std::size_t start, std::size_t first_level_end, std::vector<char>& alive,
                 std::vector<Color>& sigma, DirectShardResult& res) {
        if (chosen_.size() == target_) {
            for (std::size_t ci = 0; ci < candidates_.size(); ++ci) {
                if (alive[ci]) {
                    res.found = true;
                    res.subset = chosen_;
                    res.candidate = ci;
                    res.color = sigma[ci];
                    return Walk::found;
                }
            }
            return Walk::done;
        }
        std::size_t need = target_ - chosen_.size();
        std::size_t end = chosen_.empty() ? first_level_end : ground_.size();
        for (std::size_t i = start; i < end && i + need <= ground_.size(); ++i) {
            if (res.steps >= budget_) return Walk::budget_cut;
            ++res.steps;
            chosen_.push_back(i);
            std::vector<char> alive2 = alive;
            std::vector<Color> sigma2 = sigma;
            Walk w = Walk::done;
            if (apply_element(alive2, sigma2, res))
                w = descend(i + 1, first_level_end, alive2, sigma2, res);
            chosen_.pop_back();
            if (w != Walk::done) return w;
        }
        return Walk::done;
    }

    const Coloring& coloring_;
    const ApartSet& ground_;
    const std::vector<ParamCandidate>& candidates_;
    std::size_t target_;
    std::uint64_t budget_;
    std::vector<std::size_t> chosen_;
};

SolveOutcome direct_solve(const Coloring& coloring, const LengthPattern& pattern,
                          const SolveConfig& cfg) {
    SolveOutcome out;
    std::size_t target = cfg.target_size;
    if (target == 0) throw std::domain_error("solve: direct mode requires an explicit target_size");

    std::vector<ParamCandidate> candidates = admissible_candidates(pattern, target);
    if (candidates.empty()) {
        out.status = SolveStatus::not_found;
        out.detail = "no admissible parameters fit inside a set of " + std::to_string(target) +
                     " elements";
        return out;
    }
    if (cfg.ground.size() < target) {
        out.status = SolveStatus::not_found;
        out.detail = "ground has fewer than target_size elements";
        return out;
    }

    std::size_t shards = cfg.ground.size() - target + 1;
    std::uint64_t slice = std::max<std::uint64_t>(1, cfg.budget_steps / shards);

    std::vector<DirectShardResult> shard(shards);
    std::size_t processed = 0;
    detail::run_waves(
        shards, cfg.workers, kWaveWidth,
        [&](std::size_t i) {
            // One walker per shard: the walk keeps per-branch state.
            DirectSearch search(coloring, cfg.ground, candidates, target, slice);
            Walk w = search.run(i, shard[i]);
            shard[i].exhausted = w != Walk::budget_cut;
        },
        [&](std::size_t end) {
            processed = end;
            for (std::size_t i = end < kWaveWidth ? 0 : end - kWaveWidth; i < end; ++i)
                if (shard[i].found || !shard[i].exhausted) return true;
            return false;
        });

    for (std::size_t i = 0; i < processed; ++i) out.steps_used += shard[i].steps;

    for (std::size_t i = 0; i < processed; ++i) {
        if (!shard[i].found) continue;
        const DirectShardResult& hit = shard[i];
        Solution sol;
        sol.H = cfg.ground.subset(hit.subset);
        sol.pattern = pattern;
        sol.params = candidates[hit.candidate].params;
        sol.lengths.insert(candidates[hit.candidate].lengths.begin(),
                           candidates[hit.candidate].lengths.end());
        sol.color = hit.color;
        VerifyReport check = verify_solution(coloring, sol);
        if (!check.ok) {
            out.status = SolveStatus::not_found;
            out.detail = "internal: candidate failed re-verification: " + check.reason;
            return out;
        }
        out.status = SolveStatus::found;
        out.solution = std::move(sol);
        return out;
    }

    bool cut = false;
    for (std::size_t i = 0; i < processed; ++i) cut = cut || !shard[i].exhausted;
    out.status = cut ? SolveStatus::budget_exceeded : SolveStatus::not_found;
    if (cut) out.detail = "budget exhausted before the subset walk completed";
    return out;
}

SolveOutcome staged_solve(const Coloring& coloring, const LengthPattern& pattern,
                          const SolveConfig& cfg, bool iterated_mode) {
    if (coloring.colors() != 2)
        throw std::domain_error("solve: pipeline/iterated modes are defined for 2-colorings");

    SolveOutcome out;
    oracles::SearchLimits limits{cfg.core_budget_steps, cfg.workers};
    oracles::WitnessResult core = oracles::witness_number(
        pattern, 2, cfg.core_max_n, oracles::SearchStrategy::incremental_dfs, limits);
    out.steps_used += core.steps_used;
    if (core.status != oracles::WitnessStatus::exact) {
        out.status = SolveStatus::core_witness_unavailable;
        out.detail = core.status == oracles::WitnessStatus::lower_bound_only
                         ? "pattern-core witness number exceeds core_max_n"
                         : "pattern-core witness search ran out of budget";
        return out;
    }
    std::uint32_t k = core.value;
    out.core_k = k;

    std::size_t target = cfg.target_size;
    if (target == 0) target = iterated_mode ? k : 2 * static_cast<std::size_t>(k);

    std::uint64_t remaining =
        cfg.budget_steps > out.steps_used ? cfg.budget_steps - out.steps_used : 0;

    ApartSet homogeneous;
    std::vector<Color> induced(k, 0);
    if (iterated_mode) {
        RefinementResult rr =
            iterated_refinement(cfg.ground, coloring, k, target, remaining, cfg.stage_slack);
        out.steps_used += rr.steps;
        if (rr.status != RefinementStatus::found) {
            out.status = rr.status == RefinementStatus::budget_exceeded
                             ? SolveStatus::budget_exceeded
                             : SolveStatus::not_found;
            out.detail = "refinement stage " + std::to_string(rr.stage) +
                         (rr.status == RefinementStatus::budget_exceeded ? " ran out of budget"
                                                                         : " found no homogeneous set");
            return out;
        }
        homogeneous = std::move(*rr.set);
        induced = rr.stage_colors;
    } else {
        if (target < 2 * static_cast<std::size_t>(k))
            throw std::domain_error(
                "solve: pipeline target_size must be at least 2k to export full sum sets (k = " +
                std::to_string(k) + ")");
        TupleColoring tc = TupleColoring::derived(coloring, k);
        ExtractResult ext = extract_homogeneous(cfg.ground, tc, target, remaining);
        out.steps_used += ext.steps;
        if (ext.status != ExtractStatus::found) {
            out.status = ext.status == ExtractStatus::budget_exceeded ? SolveStatus::budget_exceeded
                                                                      : SolveStatus::not_found;
            out.detail = ext.status == ExtractStatus::budget_exceeded
                             ? "homogeneous extraction ran out of budget"
                             : "no homogeneous subset of the requested size in this ground";
            return out;
        }
        homogeneous = std::move(*ext.set);
        for (std::uint32_t i = 0; i < k; ++i) induced[i] = (ext.color >> i) & 1u;
    }

    oracles::TableColoring induced_table(2, induced);
    std::optional<oracles::ConfigWitness> witness =
        oracles::find_mono_config(induced_table, pattern);
    if (!witness) {
        out.status = SolveStatus::not_found;
        out.detail = "no monochromatic configuration inside the induced length coloring";
        return out;
    }

    std::set<SumLength> lengths(witness->instance.begin(), witness->instance.end());
    SumLength min_len = *lengths.begin();
    SumLength max_len = *lengths.rbegin();

    ApartSet exported = homogeneous;
    if (!iterated_mode) {
        // Arity-k homogeneity certifies an i-sum only where it extends to a
        // k-tuple inside the set: keep the prefix with k - min_len spare
        // elements above it.
        std::size_t keep = homogeneous.size() - k + static_cast<std::size_t>(min_len);
        exported = homogeneous.prefix(keep);
    }
    if (exported.size() < max_len) {
        out.status = SolveStatus::not_found;
        out.detail = "homogeneous set too small to export the full sum set";
        return out;
    }

    Solution sol;
    sol.H = std::move(exported);
    sol.pattern = pattern;
    sol.params = witness->params;
    sol.lengths = std::move(lengths);
    sol.color = witness->color;
    VerifyReport check = verify_solution(coloring, sol);
    if (!check.ok) {
        out.status = SolveStatus::not_found;
        out.detail = "internal: staged solution failed re-verification: " + check.reason;
        return out;
    }
    out.status = SolveStatus::found;
    out.solution = std::move(sol);
    return out;
}

}  // namespace

SolveOutcome solve(const Coloring& coloring, const LengthPattern& pattern, const SolveConfig& cfg) {
    switch (cfg.mode) {
        case SolveMode::direct:
            return direct_solve(coloring, pattern, cfg);
        case SolveMode::pipeline:
            return staged_solve(coloring, pattern, cfg, false);
        case SolveMode::iterated:
            return staged_solve(coloring, pattern, cfg, true);
    }
    throw std::logic_error("solve: unreachable");
}

VerifyReport verify_solution(const Coloring& coloring, const Solution& sol) {
    VerifyReport report;
    try {
        if (!is_apart(sol.H.elements())) {
            report.reason = "H violates the Apartness Condition";
            return report;
        }
    } catch (const std::domain_error& e) {
        report.reason = e.what();
        return report;
    }
    std::set<SumLength> expected;
    try {
        expected = instantiate_pattern(sol.pattern, sol.params);
    } catch (const std::domain_error& e) {
        report.reason = std::string("params do not match the pattern: ") + e.what();
        return report;
    }
    if (expected != sol.lengths) {
        report.reason = "length set A differs from instantiate_pattern(pattern, params)";
        return report;
    }
    if (*sol.lengths.rbegin() > sol.H.size()) {
        report.reason = "max(A) exceeds |H|";
        return report;
    }
    for (SumLength j : sol.lengths) {
        for (const BigNat& v : fs_exact(sol.H, j)) {
            Color c;
            try {
                c = coloring.at(v);
            } catch (const std::domain_error& e) {
                report.reason = std::string("coloring domain exceeded: ") + e.what();
                return report;
            }
            report.colors_by_length[j].insert(c);
            if (c != sol.color) {
                report.reason = "sum " + v.to_decimal() + " of length " + std::to_string(j) +
                                " has color " + std::to_string(c) + ", expected " +
                                std::to_string(sol.color);
                return report;
            }
        }
    }
    report.ok = true;
    return report;
}

}  // namespace hindman::solver
