#include "hindman/lowerbound/decode.hpp"

#include <json.hpp>

#include "hindman/bit_profile.hpp"

namespace hindman::lowerbound {

namespace {
using ordered_json = nlohmann::ordered_json;
}

DecodingContext DecodingContext::make(ApartSet H, SumLength a, SumLength b,
                                      EnumerationSchedule schedule) {
    if (a < 1 || b < 1) throw std::domain_error("DecodingContext: a and b must be >= 1");
    if (H.size() < a + b)
        throw std::domain_error("DecodingContext: |H| must be >= a + b");
    return DecodingContext{std::move(H), a, b, std::move(schedule)};
}

std::string decoding_context_to_json(const DecodingContext& ctx, const std::string& schedule_ref) {
    ordered_json doc;
    ordered_json h = ordered_json::array();
    for (const BigNat& x : ctx.H) h.push_back(x.to_decimal());
    doc["H"] = std::move(h);
    doc["a"] = ctx.a;
    doc["b"] = ctx.b;
    doc["schedule_ref"] = schedule_ref;
    return doc.dump(2) + "\n";
}

ParsedDecodingContext decoding_context_from_json(const std::string& text) {
    try {
        ordered_json doc = ordered_json::parse(text);
        ParsedDecodingContext out;
        std::vector<BigNat> elements;
        for (const auto& s : doc.at("H")) elements.push_back(BigNat::from_decimal(s.get<std::string>()));
        out.H = ApartSet(std::move(elements));
        out.a = doc.at("a").get<SumLength>();
        out.b = doc.at("b").get<SumLength>();
        out.schedule_ref = doc.at("schedule_ref").get<std::string>();
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error(std::string("decoding context: ") + e.what());
    }
}

DecodeOutcome decode(const DecodingContext& ctx, std::uint64_t x) {
    DecodeOutcome out;

    bool have_m = false;
    for (const BigNat& m : fs_exact(ctx.H, ctx.a)) {
        if (mu(m) >= x) {
            out.m = m;
            have_m = true;
            break;
        }
    }
    if (!have_m)
        throw InsufficientWitnessError("decode: no m in FS^{=a}(H) with mu(m) >= " +
                                       std::to_string(x));

    std::uint64_t mu_m = mu(out.m);
    bool have_n = false;
    for (const BigNat& n : fs_exact(ctx.H, ctx.b)) {
        if (out.m < n && lambda(n) > mu_m) {
            out.n = n;
            have_n = true;
            break;
        }
    }
    if (!have_n)
        throw InsufficientWitnessError(
            "decode: no n in FS^{=b}(H) above m with lambda(n) > mu(m)");

    out.lambda_n = lambda(out.n);
    out.member = ctx.schedule.in_k_at(x, out.lambda_n);
    return out;
}

}  // namespace hindman::lowerbound
