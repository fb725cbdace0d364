#include "hindman/oracles/witness.hpp"

#include <algorithm>
#include <stdexcept>

#include "hindman/detail/waves.hpp"

namespace hindman::oracles {

namespace {

using Instance = std::vector<std::uint32_t>;
using u128 = unsigned __int128;

constexpr std::size_t kWaveWidth = 8;
constexpr std::size_t kMaxChunks = 64;

// closing[d] holds the instances whose maximum element is exactly d, i.e.
// the configurations a table entry at position d can complete.
std::vector<std::vector<Instance>> closing_instances(const LengthPattern& pattern,
                                                     std::uint32_t max_n) {
    std::vector<std::vector<Instance>> closing(max_n + 1);
    for (std::uint32_t d = 1; d <= max_n; ++d) {
        for_each_params_with_max(pattern, d, [&](const PatternParams&, const Instance& inst) {
            closing[d].push_back(inst);
            return false;
        });
    }
    return closing;
}

std::vector<Instance> instances_within(const LengthPattern& pattern, std::uint32_t n) {
    std::vector<Instance> out;
    for_each_params_within(pattern, n, [&](const PatternParams&, const Instance& inst) {
        out.push_back(inst);
        return false;
    });
    return out;
}

// ---------------------------------------------------------------- DFS ----

enum class Walk { done, found_max, budget_cut };

struct DfsShardResult {
    std::uint32_t best_depth = 0;
    std::vector<Color> best;
    bool reached_max = false;
    bool exhausted = true;
    std::uint64_t steps = 0;
};

class DfsSearch {
public:
    DfsSearch(const LengthPattern& pattern, Color colors, std::uint32_t max_n)
        : closing_(closing_instances(pattern, max_n)), colors_(colors), max_n_(max_n) {}

    // True iff appending color c at position d keeps the coloring avoiding.
    bool extension_ok(const std::vector<Color>& prefix, std::uint32_t d, Color c) const {
        for (const Instance& inst : closing_[d]) {
            bool mono = true;
            for (std::uint32_t p : inst) {
                Color pc = p == d ? c : prefix[p - 1];
                if (pc != c) {
                    mono = false;
                    break;
                }
            }
            if (mono) return false;
        }
        return true;
    }

    Walk dfs(std::vector<Color>& prefix, DfsShardResult& res, std::uint64_t budget) const {
        if (prefix.size() >= max_n_) {
            res.reached_max = true;
            return Walk::found_max;
        }
        std::uint32_t d = static_cast<std::uint32_t>(prefix.size()) + 1;
        // Color permutations act on avoiders, so the root only needs color 0.
        Color last = d == 1 ? 1 : colors_;
        for (Color c = 0; c < last; ++c) {
            if (res.steps >= budget) return Walk::budget_cut;
            ++res.steps;
            if (!extension_ok(prefix, d, c)) continue;
            prefix.push_back(c);
            record(prefix, res);
            Walk w = dfs(prefix, res, budget);
            prefix.pop_back();
            if (w != Walk::done) return w;
        }
        return Walk::done;
    }

    // First time DFS reaches a depth it holds the lexicographically least
    // avoider of that length.
    static void record(const std::vector<Color>& prefix, DfsShardResult& res) {
        if (prefix.size() > res.best_depth) {
            res.best_depth = static_cast<std::uint32_t>(prefix.size());
            res.best = prefix;
        }
    }

    // Collects every avoiding prefix of length `depth` in lexicographic
    // order; phase.best tracks the deepest avoider seen on the way.
    Walk enumerate_prefixes(std::vector<Color>& prefix, std::uint32_t depth, DfsShardResult& phase,
                            std::vector<std::vector<Color>>& out, std::uint64_t budget) const {
        if (prefix.size() >= depth) {
            out.push_back(prefix);
            return Walk::done;
        }
        std::uint32_t d = static_cast<std::uint32_t>(prefix.size()) + 1;
        Color last = d == 1 ? 1 : colors_;
        for (Color c = 0; c < last; ++c) {
            if (phase.steps >= budget) return Walk::budget_cut;
            ++phase.steps;
            if (!extension_ok(prefix, d, c)) continue;
            prefix.push_back(c);
            record(prefix, phase);
            Walk w = enumerate_prefixes(prefix, depth, phase, out, budget);
            prefix.pop_back();
            if (w != Walk::done) return w;
        }
        return Walk::done;
    }

private:
    std::vector<std::vector<Instance>> closing_;
    Color colors_;
    std::uint32_t max_n_;
};

WitnessResult dfs_witness(const LengthPattern& pattern, Color colors, std::uint32_t max_n,
                          const SearchLimits& limits) {
    DfsSearch search(pattern, colors, max_n);

    // Split depth: enough prefixes to shard, capped so the sequential phase
    // stays negligible.
    std::uint32_t split = max_n;
    u128 width = 1;
    for (std::uint32_t d = 1; d <= max_n; ++d) {
        width *= colors;
        if (width >= 64) {
            split = d;
            break;
        }
    }

    DfsShardResult phase;
    std::vector<std::vector<Color>> prefixes;
    std::vector<Color> scratch;
    Walk phase_walk = search.enumerate_prefixes(scratch, split, phase, prefixes, limits.budget_steps);

    auto make_result = [&](WitnessStatus status, std::uint32_t value,
                           const std::vector<Color>& cert, std::uint64_t steps) {
        return WitnessResult{status, value, TableColoring(colors, cert), steps};
    };

    if (phase_walk == Walk::budget_cut)
        return make_result(WitnessStatus::budget_exceeded, phase.best_depth, phase.best, phase.steps);
    if (split >= max_n && !prefixes.empty()) {
        // The prefix walk itself reached full depth: lower bound certified.
        return make_result(WitnessStatus::lower_bound_only, max_n, prefixes.front(), phase.steps);
    }
    if (prefixes.empty()) {
        // Tree exhausted below the split depth.
        return make_result(WitnessStatus::exact, phase.best_depth + 1, phase.best, phase.steps);
    }

    std::uint64_t remaining = limits.budget_steps > phase.steps
                                  ? limits.budget_steps - phase.steps
                                  : 0;
    std::uint64_t slice = std::max<std::uint64_t>(1, remaining / prefixes.size());

    std::vector<DfsShardResult> shard(prefixes.size());
    std::size_t processed = 0;
    detail::run_waves(
        prefixes.size(), limits.workers, kWaveWidth,
        [&](std::size_t i) {
            std::vector<Color> prefix = prefixes[i];
            DfsSearch::record(prefix, shard[i]);
            Walk w = search.dfs(prefix, shard[i], slice);
            shard[i].exhausted = w != Walk::budget_cut;
        },
        [&](std::size_t end) {
            processed = end;
            for (std::size_t i = end < kWaveWidth ? 0 : end - kWaveWidth; i < end; ++i)
                if (shard[i].reached_max || !shard[i].exhausted) return true;
            return false;
        });

    std::uint64_t steps = phase.steps;
    for (std::size_t i = 0; i < processed; ++i) steps += shard[i].steps;

    for (std::size_t i = 0; i < processed; ++i) {
        if (shard[i].reached_max)
            return make_result(WitnessStatus::lower_bound_only, max_n, shard[i].best, steps);
    }

    std::uint32_t best_depth = phase.best_depth;
    const std::vector<Color>* best = &phase.best;
    for (std::size_t i = 0; i < processed; ++i) {
        if (shard[i].best_depth > best_depth) {
            best_depth = shard[i].best_depth;
            best = &shard[i].best;
        }
    }
    bool cut = false;
    for (std::size_t i = 0; i < processed; ++i) cut = cut || !shard[i].exhausted;
    if (cut) return make_result(WitnessStatus::budget_exceeded, best_depth, *best, steps);
    return make_result(WitnessStatus::exact, best_depth + 1, *best, steps);
}

// --------------------------------------------------- full enumeration ----

struct EnumShardResult {
    bool found = false;
    u128 index = 0;
    std::vector<Color> table;  // full table including position 1
    bool complete = true;
    std::uint64_t steps = 0;
};

u128 pow_saturating(Color base, std::uint32_t exp) {
    u128 out = 1;
    const u128 cap = u128(1) << 120;
    for (std::uint32_t i = 0; i < exp; ++i) {
        out *= base;
        if (out > cap) return cap;
    }
    return out;
}

std::vector<Color> digits_of(u128 index, Color base, std::uint32_t len) {
    std::vector<Color> digits(len, 0);
    for (std::uint32_t i = len; i-- > 0;) {
        digits[i] = static_cast<Color>(index % base);
        index /= base;
    }
    return digits;
}

// Scans colorings of [1, n] with color(1) = 0, indices [from, to), ascending.
// Index digits are the colors of positions 2..n, most significant first, so
// ascending index is ascending lexicographic order.
void scan_chunk(std::uint32_t n, Color colors, const std::vector<Instance>& instances,
                const std::vector<std::uint64_t>* masks, u128 from, u128 to,
                std::uint64_t budget, EnumShardResult& res) {
    if (masks) {
        std::uint64_t idx = static_cast<std::uint64_t>(from);
        std::uint64_t end = static_cast<std::uint64_t>(to);
        for (; idx < end; ++idx) {
            if (res.steps >= budget) {
                res.complete = false;
                return;
            }
            ++res.steps;
            bool avoids = true;
            for (std::uint64_t m : *masks) {
                std::uint64_t bits = idx & m;
                if (bits == 0 || bits == m) {
                    avoids = false;
                    break;
                }
            }
            if (avoids) {
                res.found = true;
                res.index = idx;
                res.table.assign(n, 0);
                for (std::uint32_t p = 2; p <= n; ++p)
                    res.table[p - 1] = static_cast<Color>((idx >> (n - p)) & 1);
                return;
            }
        }
        return;
    }

    std::vector<Color> digits = digits_of(from, colors, n - 1);
    for (u128 idx = from; idx < to; ++idx) {
        if (res.steps >= budget) {
            res.complete = false;
            return;
        }
        ++res.steps;
        bool avoids = true;
        for (const Instance& inst : instances) {
            Color c0 = inst[0] == 1 ? 0 : digits[inst[0] - 2];
            bool mono = true;
            for (std::uint32_t p : inst) {
                Color pc = p == 1 ? 0 : digits[p - 2];
                if (pc != c0) {
                    mono = false;
                    break;
                }
            }
            if (mono) {
                avoids = false;
                break;
            }
        }
        if (avoids) {
            res.found = true;
            res.index = idx;
            res.table.assign(n, 0);
            for (std::uint32_t p = 2; p <= n; ++p) res.table[p - 1] = digits[p - 2];
            return;
        }
        // Odometer step on the trailing digit.
        for (std::uint32_t i = n - 1; i-- > 0;) {
            if (++digits[i] < colors) break;
            digits[i] = 0;
        }
    }
}

WitnessResult enumeration_witness(const LengthPattern& pattern, Color colors, std::uint32_t max_n,
                                  const SearchLimits& limits) {
    std::uint64_t steps = 0;
    std::vector<Color> cert;  // avoider for the previous n
    for (std::uint32_t n = 1; n <= max_n; ++n) {
        std::vector<Instance> instances = instances_within(pattern, n);

        // Bitmask fast path for 2 colors on word-sized intervals: position p
        // maps to bit n - p, matching the index layout used by scan_chunk.
        std::vector<std::uint64_t> masks;
        bool use_masks = colors == 2 && n <= 64;
        if (use_masks) {
            masks.reserve(instances.size());
            for (const Instance& inst : instances) {
                std::uint64_t m = 0;
                for (std::uint32_t p : inst) m |= std::uint64_t{1} << (n - p);
                masks.push_back(m);
            }
        }

        u128 space = pow_saturating(colors, n - 1);
        std::size_t chunks = static_cast<std::size_t>(
            space < u128(kMaxChunks) ? static_cast<std::uint64_t>(space) : kMaxChunks);
        std::uint64_t remaining = limits.budget_steps > steps ? limits.budget_steps - steps : 0;
        if (remaining == 0)
            return WitnessResult{WitnessStatus::budget_exceeded, n - 1, TableColoring(colors, cert),
                                 steps};
        std::uint64_t slice = std::max<std::uint64_t>(1, remaining / chunks);

        std::vector<EnumShardResult> shard(chunks);
        std::size_t processed = 0;
        detail::run_waves(
            chunks, limits.workers, kWaveWidth,
            [&](std::size_t i) {
                u128 from = space * i / chunks;
                u128 to = space * (i + 1) / chunks;
                scan_chunk(n, colors, instances, use_masks ? &masks : nullptr, from, to, slice,
                           shard[i]);
            },
            [&](std::size_t end) {
                processed = end;
                for (std::size_t i = end < kWaveWidth ? 0 : end - kWaveWidth; i < end; ++i)
                    if (shard[i].found || !shard[i].complete) return true;
                return false;
            });

        for (std::size_t i = 0; i < processed; ++i) steps += shard[i].steps;

        const EnumShardResult* found = nullptr;
        bool all_complete = true;
        for (std::size_t i = 0; i < processed && !found; ++i) {
            if (shard[i].found) found = &shard[i];
            all_complete = all_complete && shard[i].complete;
        }
        if (found) {
            cert = found->table;
            continue;
        }
        if (!all_complete) {
            return WitnessResult{WitnessStatus::budget_exceeded, n - 1, TableColoring(colors, cert),
                                 steps};
        }
        // No r-coloring of [1, n] avoids the pattern: n is the witness.
        return WitnessResult{WitnessStatus::exact, n, TableColoring(colors, cert), steps};
    }
    return WitnessResult{WitnessStatus::lower_bound_only, max_n, TableColoring(colors, cert), steps};
}

}  // namespace

WitnessResult witness_number(const LengthPattern& pattern, Color colors, std::uint32_t max_n,
                             SearchStrategy strategy, const SearchLimits& limits) {
    if (colors < 1) throw std::domain_error("witness_number: need at least one color");
    if (max_n < 1) throw std::domain_error("witness_number: max_n must be >= 1");
    if (strategy == SearchStrategy::incremental_dfs) return dfs_witness(pattern, colors, max_n, limits);
    return enumeration_witness(pattern, colors, max_n, limits);
}

}  // namespace hindman::oracles
