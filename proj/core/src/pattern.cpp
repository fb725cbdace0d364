#include "hindman/pattern.hpp"

#include <charconv>
#include <stdexcept>

namespace hindman {

namespace {

std::uint64_t parse_positive(std::string_view token, std::string_view whole) {
    std::uint64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value == 0)
        throw std::domain_error("pattern: invalid parameter \"" + std::string(token) + "\" in \"" +
                                std::string(whole) + "\"");
    return value;
}

void subset_sums(const std::vector<SumLength>& indices, std::size_t next, SumLength acc,
                 std::set<SumLength>& out) {
    if (acc != 0) out.insert(acc);
    for (std::size_t i = next; i < indices.size(); ++i)
        subset_sums(indices, i + 1, acc + indices[i], out);
}

}  // namespace

LengthPattern LengthPattern::schur() { return LengthPattern(Kind::schur, 0, 0, {}); }

LengthPattern LengthPattern::vdw(SumLength ell) {
    if (ell < 1) throw std::domain_error("vdw: progression length must be >= 1");
    return LengthPattern(Kind::vdw, ell, 0, {});
}

LengthPattern LengthPattern::brauer(SumLength ell, SumLength s) {
    if (ell < 1) throw std::domain_error("brauer: progression length must be >= 1");
    if (s < 1) throw std::domain_error("brauer: multiplier s must be >= 1");
    return LengthPattern(Kind::brauer, ell, s, {});
}

LengthPattern LengthPattern::folkman(SumLength ell) {
    if (ell < 1) throw std::domain_error("folkman: index count must be >= 1");
    return LengthPattern(Kind::folkman, ell, 0, {});
}

LengthPattern LengthPattern::explicit_set(std::set<SumLength> lengths) {
    if (lengths.empty()) throw std::domain_error("explicit pattern: length set must be non-empty");
    if (lengths.count(0)) throw std::domain_error("explicit pattern: lengths must be positive");
    return LengthPattern(Kind::explicit_set, 0, 0, std::move(lengths));
}

std::string LengthPattern::to_string() const {
    switch (kind_) {
        case Kind::schur:
            return "schur";
        case Kind::vdw:
            return "vdw:" + std::to_string(ell_);
        case Kind::brauer:
            return "brauer:" + std::to_string(ell_) + ":" + std::to_string(s_);
        case Kind::folkman:
            return "folkman:" + std::to_string(ell_);
        case Kind::explicit_set: {
            std::string out = "explicit:";
            bool first = true;
            for (SumLength v : explicit_) {
                if (!first) out += ',';
                out += std::to_string(v);
                first = false;
            }
            return out;
        }
    }
    throw std::logic_error("LengthPattern::to_string: unreachable");
}

LengthPattern LengthPattern::parse(std::string_view text) {
    auto next_field = [&](std::string_view& rest) {
        std::size_t pos = rest.find(':');
        std::string_view field = rest.substr(0, pos);
        rest = pos == std::string_view::npos ? std::string_view{} : rest.substr(pos + 1);
        return field;
    };
    std::string_view rest = text;
    std::string_view head = next_field(rest);
    if (head == "schur") {
        if (!rest.empty())
            throw std::domain_error("pattern: trailing parameters in \"" + std::string(text) + "\"");
        return schur();
    }
    if (head == "vdw") return vdw(parse_positive(next_field(rest), text));
    if (head == "brauer") {
        SumLength ell = parse_positive(next_field(rest), text);
        SumLength s = parse_positive(next_field(rest), text);
        return brauer(ell, s);
    }
    if (head == "folkman") return folkman(parse_positive(next_field(rest), text));
    if (head == "explicit") {
        std::set<SumLength> lengths;
        while (!rest.empty()) {
            std::size_t pos = rest.find(',');
            std::string_view item = rest.substr(0, pos);
            rest = pos == std::string_view::npos ? std::string_view{} : rest.substr(pos + 1);
            lengths.insert(parse_positive(item, text));
        }
        if (lengths.empty())
            throw std::domain_error("pattern: explicit set is empty in \"" + std::string(text) + "\"");
        return explicit_set(std::move(lengths));
    }
    throw std::domain_error("pattern: unknown kind \"" + std::string(head) + "\"");
}

std::set<SumLength> instantiate_pattern(const LengthPattern& pattern, const PatternParams& params,
                                        bool require_distinct_params) {
    if (pattern.uses_ab()) {
        if (params.a == 0 || params.b == 0 || !params.indices.empty())
            throw std::domain_error("instantiate_pattern: expected positive (a, b) parameters");
        if (require_distinct_params && params.a == params.b)
            throw std::domain_error("instantiate_pattern: a == b rejected by require_distinct_params");
    }
    switch (pattern.kind()) {
        case LengthPattern::Kind::schur:
            return {params.a, params.b, params.a + params.b};
        case LengthPattern::Kind::vdw: {
            std::set<SumLength> out;
            for (SumLength j = 0; j < pattern.ell(); ++j) out.insert(params.a + j * params.b);
            return out;
        }
        case LengthPattern::Kind::brauer: {
            std::set<SumLength> out;
            for (SumLength j = 0; j < pattern.ell(); ++j) out.insert(params.a + j * params.b);
            out.insert(pattern.s() * params.b);
            return out;
        }
        case LengthPattern::Kind::folkman: {
            if (params.indices.size() != pattern.ell())
                throw std::domain_error("instantiate_pattern: expected " +
                                        std::to_string(pattern.ell()) + " Folkman indices");
            for (std::size_t i = 0; i < params.indices.size(); ++i) {
                if (params.indices[i] == 0)
                    throw std::domain_error("instantiate_pattern: Folkman indices must be >= 1");
                if (i > 0 && params.indices[i - 1] >= params.indices[i])
                    throw std::domain_error(
                        "instantiate_pattern: Folkman indices must be strictly increasing");
            }
            std::set<SumLength> out;
            subset_sums(params.indices, 0, 0, out);
            return out;
        }
        case LengthPattern::Kind::explicit_set:
            if (params != PatternParams::none())
                throw std::domain_error("instantiate_pattern: explicit patterns take no parameters");
            return pattern.explicit_lengths();
    }
    throw std::logic_error("instantiate_pattern: unreachable");
}

}  // namespace hindman
