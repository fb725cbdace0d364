#include "hindman/solver/solution_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace hindman::solver {

namespace {
using ordered_json = nlohmann::ordered_json;
}

std::string solution_to_json(const Solution& sol, const std::string& coloring_ref, bool verified,
                             const std::string& mode, std::uint64_t budget_used) {
    ordered_json doc;
    ordered_json h = ordered_json::array();
    for (const BigNat& x : sol.H) h.push_back(x.to_decimal());
    doc["H"] = std::move(h);
    doc["pattern"] = sol.pattern.to_string();
    ordered_json params = ordered_json::object();
    if (sol.pattern.uses_ab()) {
        params["a"] = sol.params.a;
        params["b"] = sol.params.b;
    } else if (sol.pattern.kind() == LengthPattern::Kind::folkman) {
        params["indices"] = sol.params.indices;
    }
    doc["params"] = std::move(params);
    doc["A"] = sol.lengths;
    doc["color"] = sol.color;
    doc["coloring_ref"] = coloring_ref;
    doc["verified"] = verified;
    doc["mode"] = mode;
    doc["budget_used"] = budget_used;
    return doc.dump(2) + "\n";
}

SolutionDocument solution_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error(std::string("solution document: ") + e.what());
    }
    try {
        SolutionDocument out;
        std::vector<BigNat> elements;
        for (const auto& s : doc.at("H")) elements.push_back(BigNat::from_decimal(s.get<std::string>()));
        out.solution.H = ApartSet(std::move(elements));
        out.solution.pattern = LengthPattern::parse(doc.at("pattern").get<std::string>());
        const auto& params = doc.at("params");
        if (out.solution.pattern.uses_ab())
            out.solution.params =
                PatternParams::ab(params.at("a").get<SumLength>(), params.at("b").get<SumLength>());
        else if (out.solution.pattern.kind() == LengthPattern::Kind::folkman)
            out.solution.params =
                PatternParams::folkman(params.at("indices").get<std::vector<SumLength>>());
        for (const auto& v : doc.at("A")) out.solution.lengths.insert(v.get<SumLength>());
        out.solution.color = doc.at("color").get<Color>();
        out.coloring_ref = doc.at("coloring_ref").get<std::string>();
        out.verified = doc.at("verified").get<bool>();
        out.mode = doc.at("mode").get<std::string>();
        out.budget_used = doc.at("budget_used").get<std::uint64_t>();
        if (out.solution.lengths != instantiate_pattern(out.solution.pattern, out.solution.params))
            throw std::domain_error("solution document: A does not match pattern and params");
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error(std::string("solution document: ") + e.what());
    }
}

std::string mode_name(SolveMode mode) {
    switch (mode) {
        case SolveMode::direct:
            return "direct";
        case SolveMode::pipeline:
            return "pipeline";
        case SolveMode::iterated:
            return "iterated";
    }
    throw std::logic_error("mode_name: unreachable");
}

}  // namespace hindman::solver
