#include "hindman/oracles/mono_search.hpp"

#include <algorithm>

namespace hindman::oracles {

namespace {

using Instance = std::vector<std::uint32_t>;
using ParamsFn = std::function<bool(const PatternParams&, const Instance&)>;

void sort_unique(Instance& out) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

// Fills `out` with the instantiated (a, b) family set. Caller guarantees the
// values fit in 32 bits.
void fill_ab_instance(const LengthPattern& pattern, std::uint64_t a, std::uint64_t b,
                      Instance& out) {
    out.clear();
    switch (pattern.kind()) {
        case LengthPattern::Kind::schur:
            out = {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                   static_cast<std::uint32_t>(a + b)};
            break;
        case LengthPattern::Kind::vdw:
            for (std::uint64_t j = 0; j < pattern.ell(); ++j)
                out.push_back(static_cast<std::uint32_t>(a + j * b));
            break;
        case LengthPattern::Kind::brauer:
            for (std::uint64_t j = 0; j < pattern.ell(); ++j)
                out.push_back(static_cast<std::uint32_t>(a + j * b));
            out.push_back(static_cast<std::uint32_t>(pattern.s() * b));
            break;
        default:
            break;
    }
    sort_unique(out);
}

bool walk_ab_within(const LengthPattern& pattern, std::uint32_t n, const ParamsFn& fn) {
    const std::uint64_t ell = pattern.ell();
    const std::uint64_t s = pattern.s();
    Instance instance;
    for (std::uint64_t a = 1; a <= n; ++a) {
        for (std::uint64_t b = 1;; ++b) {
            std::uint64_t top = 0;
            switch (pattern.kind()) {
                case LengthPattern::Kind::schur:
                    top = a + b;
                    break;
                case LengthPattern::Kind::vdw:
                    // A length-1 progression does not mention b; only the
                    // canonical b = 1 is enumerated.
                    if (ell == 1 && b > 1) top = n + 1;
                    else top = a + (ell - 1) * b;
                    break;
                case LengthPattern::Kind::brauer:
                    top = std::max(a + (ell - 1) * b, s * b);
                    break;
                default:
                    return false;
            }
            if (top > n) break;
            fill_ab_instance(pattern, a, b, instance);
            if (fn(PatternParams::ab(a, b), instance)) return true;
        }
    }
    return false;
}

bool walk_ab_with_max(const LengthPattern& pattern, std::uint32_t max_element, const ParamsFn& fn) {
    const std::uint64_t m = max_element;
    const std::uint64_t ell = pattern.ell();
    const std::uint64_t s = pattern.s();
    Instance instance;
    auto emit = [&](std::uint64_t a, std::uint64_t b) {
        fill_ab_instance(pattern, a, b, instance);
        return fn(PatternParams::ab(a, b), instance);
    };
    switch (pattern.kind()) {
        case LengthPattern::Kind::schur:
            // max is always a + b.
            for (std::uint64_t a = 1; a < m; ++a)
                if (emit(a, m - a)) return true;
            return false;
        case LengthPattern::Kind::vdw:
            if (ell == 1) return m >= 1 && emit(m, 1);
            // max is a + (ell-1) b; descending b gives ascending a.
            for (std::uint64_t b = (m - 1) / (ell - 1); b >= 1; --b)
                if (emit(m - (ell - 1) * b, b)) return true;
            return false;
        case LengthPattern::Kind::brauer: {
            // Case max = a + (ell-1) b >= s b, collected first, then
            // case max = s b with the progression strictly below. Both are
            // rare enough that ordering here only needs to be deterministic.
            if (ell == 1) {
                for (std::uint64_t b = 1; s * b <= m; ++b)
                    if (emit(m, b)) return true;
            } else {
                for (std::uint64_t b = (m - 1) / (ell - 1); b >= 1; --b) {
                    if (s * b > m) continue;
                    if (emit(m - (ell - 1) * b, b)) return true;
                }
            }
            if (m % s == 0) {
                std::uint64_t b = m / s;
                std::uint64_t progression_top = (ell - 1) * b;
                for (std::uint64_t a = 1; a + progression_top < m; ++a)
                    if (emit(a, b)) return true;
            }
            return false;
        }
        default:
            return false;
    }
}

// Folkman index tuples i_1 < ... < i_ell with sum of all indices (the largest
// subset sum) bounded by `limit`, or equal to `exact` when exact != 0.
bool walk_folkman(std::uint64_t ell, std::uint64_t limit, std::uint64_t exact, const ParamsFn& fn) {
    std::vector<SumLength> indices;
    Instance instance;
    std::function<bool(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t next_min,
                                                                std::uint64_t used) -> bool {
        if (indices.size() == ell) {
            if (exact != 0 && used != exact) return false;
            PatternParams params = PatternParams::folkman(indices);
            instance.clear();
            // Subset sums of at most ~2^ell values; ell stays tiny at desk scale.
            std::function<void(std::size_t, std::uint64_t)> sums = [&](std::size_t i,
                                                                       std::uint64_t acc) {
                if (acc != 0) instance.push_back(static_cast<std::uint32_t>(acc));
                for (std::size_t j = i; j < indices.size(); ++j) sums(j + 1, acc + indices[j]);
            };
            sums(0, 0);
            sort_unique(instance);
            return fn(params, instance);
        }
        std::uint64_t remaining = ell - indices.size();
        for (std::uint64_t v = next_min;; ++v) {
            // Cheapest completion keeps choosing consecutive values.
            std::uint64_t tail_min = used + remaining * v + remaining * (remaining - 1) / 2;
            if (tail_min > limit) return false;
            indices.push_back(v);
            bool stop = rec(v + 1, used + v);
            indices.pop_back();
            if (stop) return true;
        }
    };
    return rec(1, 0);
}

bool walk_explicit(const LengthPattern& pattern, std::uint32_t n, bool require_max, const ParamsFn& fn) {
    const auto& lengths = pattern.explicit_lengths();
    std::uint64_t top = *lengths.rbegin();
    if (require_max ? top != n : top > n) return false;
    Instance instance;
    for (SumLength v : lengths) instance.push_back(static_cast<std::uint32_t>(v));
    return fn(PatternParams::none(), instance);
}

}  // namespace

bool for_each_params_within(const LengthPattern& pattern, std::uint32_t n, const ParamsFn& fn) {
    switch (pattern.kind()) {
        case LengthPattern::Kind::schur:
        case LengthPattern::Kind::vdw:
        case LengthPattern::Kind::brauer:
            return walk_ab_within(pattern, n, fn);
        case LengthPattern::Kind::folkman:
            return walk_folkman(pattern.ell(), n, 0, fn);
        case LengthPattern::Kind::explicit_set:
            return walk_explicit(pattern, n, false, fn);
    }
    return false;
}

bool for_each_params_with_max(const LengthPattern& pattern, std::uint32_t max_element,
                              const ParamsFn& fn) {
    switch (pattern.kind()) {
        case LengthPattern::Kind::schur:
        case LengthPattern::Kind::vdw:
        case LengthPattern::Kind::brauer:
            return walk_ab_with_max(pattern, max_element, fn);
        case LengthPattern::Kind::folkman:
            return walk_folkman(pattern.ell(), max_element, max_element, fn);
        case LengthPattern::Kind::explicit_set:
            return walk_explicit(pattern, max_element, true, fn);
    }
    return false;
}

std::optional<ConfigWitness> find_mono_config(const TableColoring& coloring,
                                              const LengthPattern& pattern) {
    std::optional<ConfigWitness> found;
    for_each_params_within(
        pattern, coloring.size(),
        [&](const PatternParams& params, const std::vector<std::uint32_t>& instance) {
            Color c = coloring.at(instance.front());
            for (std::uint32_t p : instance) {
                if (coloring.at(p) != c) return false;
            }
            ConfigWitness w;
            w.params = params;
            w.color = c;
            w.instance.insert(instance.begin(), instance.end());
            found = std::move(w);
            return true;
        });
    return found;
}

bool is_avoiding(const TableColoring& coloring, const LengthPattern& pattern) {
    return !find_mono_config(coloring, pattern).has_value();
}

bool verify_config_witness(const TableColoring& coloring, const LengthPattern& pattern,
                           const ConfigWitness& witness) {
    std::set<std::uint64_t> expected;
    try {
        for (SumLength v : instantiate_pattern(pattern, witness.params)) expected.insert(v);
    } catch (const std::domain_error&) {
        return false;
    }
    if (expected != witness.instance) return false;
    for (std::uint64_t p : witness.instance) {
        if (p < 1 || p > coloring.size()) return false;
        if (coloring.at(static_cast<std::uint32_t>(p)) != witness.color) return false;
    }
    return true;
}

}  // namespace hindman::oracles
