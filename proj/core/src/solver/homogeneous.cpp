#include "hindman/solver/homogeneous.hpp"

#include <stdexcept>

namespace hindman::solver {

namespace {

enum class Walk { done, found, budget_cut };

class SubsetSearch {
public:
    SubsetSearch(const ApartSet& ground, const TupleColoring& tc, std::size_t target,
                 std::uint64_t budget)
        : ground_(ground), tc_(tc), target_(target), budget_(budget) {}

    Walk run(ExtractResult& res) {
        chosen_.clear();
        tuple_.resize(tc_.arity());
        return dfs(0, std::nullopt, res);
    }

private:
    // Tuples completed by the newest element: every (arity-1)-subset of the
    // earlier choices extended by it. Returns false on a color clash.
    bool check_new_tuples(std::optional<Color>& sigma, ExtractResult& res) {
        std::size_t m = chosen_.size();
        std::uint32_t arity = tc_.arity();
        if (m < arity) return true;
        scratch_.clear();
        return pick_subset(0, arity - 1, sigma, res);
    }

    bool pick_subset(std::size_t start, std::uint32_t remaining, std::optional<Color>& sigma,
                     ExtractResult& res) {
        if (remaining == 0) {
            for (std::size_t j = 0; j < scratch_.size(); ++j) tuple_[j] = ground_[scratch_[j]];
            tuple_[scratch_.size()] = ground_[chosen_.back()];
            ++res.steps;
            Color c = tc_.at(tuple_);
            if (!sigma) {
                sigma = c;
                return true;
            }
            return *sigma == c;
        }
        std::size_t limit = chosen_.size() - 1;  // the newest element is fixed
        for (std::size_t i = start; i + remaining <= limit; ++i) {
            scratch_.push_back(chosen_[i]);
            bool ok = pick_subset(i + 1, remaining - 1, sigma, res);
            scratch_.pop_back();
            if (!ok) return false;
        }
        return true;
    }

    Walk dfs(std::size_t start, std::optional<Color> sigma, ExtractResult& res) {
        if (chosen_.size() == target_) {
            // target >= arity, so at least one tuple was completed on the way.
            if (!sigma) throw std::logic_error("extract_homogeneous: no tuple evaluated");
            ApartSet subset = ground_.subset(chosen_);
            res.status = ExtractStatus::found;
            res.set = std::move(subset);
            res.color = *sigma;
            return Walk::found;
        }
        std::size_t need = target_ - chosen_.size();
        for (std::size_t i = start; i + need <= ground_.size(); ++i) {
            if (res.steps >= budget_) return Walk::budget_cut;
            ++res.steps;
            chosen_.push_back(i);
            std::optional<Color> branch_sigma = sigma;
            Walk w = Walk::done;
            if (check_new_tuples(branch_sigma, res)) w = dfs(i + 1, branch_sigma, res);
            chosen_.pop_back();
            if (w != Walk::done) return w;
        }
        return Walk::done;
    }

    const ApartSet& ground_;
    const TupleColoring& tc_;
    std::size_t target_;
    std::uint64_t budget_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> scratch_;
    std::vector<BigNat> tuple_;
};

}  // namespace

ExtractResult extract_homogeneous(const ApartSet& ground, const TupleColoring& tc,
                                  std::size_t target_size, std::uint64_t budget_steps) {
    if (target_size < tc.arity())
        throw std::domain_error("extract_homogeneous: target_size must be >= the tuple arity");
    ExtractResult res;
    SubsetSearch search(ground, tc, target_size, budget_steps);
    Walk w = search.run(res);
    if (w == Walk::budget_cut) res.status = ExtractStatus::budget_exceeded;
    return res;
}

RefinementResult iterated_refinement(const ApartSet& ground, const Coloring& c, std::size_t k,
                                     std::size_t target_size, std::uint64_t budget_steps,
                                     std::size_t stage_slack) {
    if (k < 1) throw std::domain_error("iterated_refinement: k must be >= 1");
    if (target_size < k) throw std::domain_error("iterated_refinement: target_size must be >= k");

    RefinementResult out;
    ApartSet current = ground;
    for (std::size_t i = 1; i <= k; ++i) {
        std::size_t stage_target = target_size + (k - i) * stage_slack;
        TupleColoring stage = TupleColoring::sum_colored(c, static_cast<std::uint32_t>(i));
        std::uint64_t remaining = budget_steps > out.steps ? budget_steps - out.steps : 0;
        ExtractResult ext = extract_homogeneous(current, stage, stage_target, remaining);
        out.steps += ext.steps;
        if (ext.status != ExtractStatus::found) {
            out.status = ext.status == ExtractStatus::budget_exceeded
                             ? RefinementStatus::budget_exceeded
                             : RefinementStatus::failed_stage;
            out.stage = i;
            return out;
        }
        current = std::move(*ext.set);
        out.stage_colors.push_back(ext.color);
    }
    out.status = RefinementStatus::found;
    out.set = std::move(current);
    return out;
}

}  // namespace hindman::solver
