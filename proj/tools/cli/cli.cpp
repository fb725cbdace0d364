#include "cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "hindman/apartness.hpp"
#include "hindman/bit_profile.hpp"
#include "hindman/lowerbound/claims.hpp"
#include "hindman/lowerbound/decode.hpp"
#include "hindman/lowerbound/gaps.hpp"
#include "hindman/lowerbound/schedule.hpp"
#include "hindman/oracles/mono_search.hpp"
#include "hindman/oracles/table_coloring.hpp"
#include "hindman/oracles/witness.hpp"
#include "hindman/pattern.hpp"
#include "hindman/solver/solution_io.hpp"
#include "hindman/solver/solve.hpp"

namespace hindman::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write file \"" + path + "\"");
    out << content;
}

/// Paths in a document are resolved against the directory of the document.
std::string sibling_path(const std::string& document_path, const std::string& ref) {
    if (ref.empty() || ref.front() == '/') return ref;
    std::size_t slash = document_path.find_last_of('/');
    if (slash == std::string::npos) return ref;
    return document_path.substr(0, slash + 1) + ref;
}

BigNat parse_nat(const std::string& text, const char* what) {
    try {
        return BigNat::from_decimal(text);
    } catch (const std::domain_error&) {
        throw InvalidInput(std::string(what) + ": \"" + text + "\" is not a decimal number");
    }
}

LengthPattern checked_pattern(const std::string& spec) {
    try {
        return LengthPattern::parse(spec);
    } catch (const std::domain_error& e) {
        throw InvalidInput(e.what());
    }
}

ordered_json gaps_json(const std::set<Gap>& gaps) {
    ordered_json out = ordered_json::array();
    for (const Gap& g : gaps) out.push_back({g.first, g.second});
    return out;
}

ordered_json params_json(const LengthPattern& pattern, const PatternParams& params) {
    ordered_json out = ordered_json::object();
    if (pattern.uses_ab()) {
        out["a"] = params.a;
        out["b"] = params.b;
    } else if (pattern.kind() == LengthPattern::Kind::folkman) {
        out["indices"] = params.indices;
    }
    return out;
}

// ------------------------------------------------------------- parsing ----

Command build_parser_and_parse(const std::vector<std::string>& args) {
    CLI::App app{"hindman-lab: restricted finite-sums search and verification toolkit"};
    app.require_subcommand(1);

    ProfileCmd profile;
    auto* profile_app = app.add_subcommand("profile", "Binary exponent profile of n");
    profile_app->add_option("n", profile.n, "positive integer (decimal)")->required();

    WitnessCmd witness;
    auto* witness_app =
        app.add_subcommand("witness", "Least interval length forcing a monochromatic configuration");
    witness_app->add_option("--pattern", witness.pattern, "pattern spec")->required();
    witness_app->add_option("--colors", witness.colors, "number of colors r")
        ->check(CLI::PositiveNumber);
    witness_app->add_option("--max", witness.max_n, "largest interval length tried")
        ->check(CLI::PositiveNumber);
    witness_app->add_option("--strategy", witness.strategy, "search strategy")
        ->check(CLI::IsMember({"dfs", "full"}));
    witness_app->add_option("--budget-steps", witness.budget_steps, "step budget")
        ->check(CLI::PositiveNumber);
    witness_app->add_option("--workers", witness.workers, "worker threads")
        ->check(CLI::PositiveNumber)
        ->envname("HINDMAN_LAB_WORKERS");
    witness_app->add_option("--cert-out", witness.cert_out, "write the avoiding certificate here");

    FindConfigCmd find_config;
    auto* find_app =
        app.add_subcommand("find-config", "Least monochromatic configuration in a table coloring");
    find_app->add_option("--table", find_config.table_path, "table coloring file")->required();
    find_app->add_option("--pattern", find_config.pattern, "pattern spec")->required();

    SolveCmd solve_cmd;
    auto* solve_app = app.add_subcommand("solve", "Find an apart set with monochromatic FS^A");
    solve_app->add_option("--pattern", solve_cmd.pattern, "pattern spec")->required();
    solve_app->add_option("--coloring", solve_cmd.coloring,
                          "const:<c> | parity | popcount-parity | vsg:<file> | table:<file>")
        ->required();
    solve_app->add_option("--mode", solve_cmd.mode, "direct | pipeline | iterated")
        ->check(CLI::IsMember({"direct", "pipeline", "iterated"}));
    solve_app->add_option("--ground-count", solve_cmd.ground_count, "ground size")
        ->check(CLI::PositiveNumber);
    solve_app->add_option("--ground-start", solve_cmd.ground_start, "first exponent");
    solve_app->add_option("--ground-stride", solve_cmd.ground_stride, "exponent stride")
        ->check(CLI::PositiveNumber);
    solve_app->add_option("--ground-file", solve_cmd.ground_file,
                          "file with one decimal element per line (overrides generated ground)");
    solve_app->add_option("--target-size", solve_cmd.target_size,
                          "solution set size (0 = automatic for pipeline/iterated)");
    solve_app->add_option("--budget-steps", solve_cmd.budget_steps, "step budget")
        ->check(CLI::PositiveNumber);
    solve_app->add_option("--workers", solve_cmd.workers, "worker threads")
        ->check(CLI::PositiveNumber)
        ->envname("HINDMAN_LAB_WORKERS");
    solve_app->add_option("--core-max", solve_cmd.core_max_n,
                          "cap for the pattern-core witness number")
        ->check(CLI::PositiveNumber);
    solve_app->add_option("--core-budget-steps", solve_cmd.core_budget_steps,
                          "budget for the pattern-core witness search")
        ->check(CLI::PositiveNumber);
    solve_app->add_option("--stage-slack", solve_cmd.stage_slack,
                          "extra elements per refinement stage (iterated mode)");
    solve_app->add_option("--out", solve_cmd.out, "write the solution document here");

    VsgCmd vsg;
    auto* vsg_app = app.add_subcommand("vsg", "Short and very short gaps of n under a schedule");
    vsg_app->add_option("--schedule", vsg.schedule_path, "enumeration schedule file")->required();
    vsg_app->add_option("--n", vsg.n, "positive integer (decimal)")->required();

    ClaimsCmd claims;
    auto* claims_app =
        app.add_subcommand("claims", "Sum identity for (m, n) or parity sweep over a solution");
    claims_app->add_option("--schedule", claims.schedule_path, "enumeration schedule file")
        ->required();
    claims_app->add_option("--m", claims.m, "decimal m (identity check)");
    claims_app->add_option("--n", claims.n, "decimal n (identity check)");
    claims_app->add_option("--solution", claims.solution_path, "solution document (parity sweep)");

    DecodeCmd decode_cmd;
    auto* decode_app = app.add_subcommand("decode", "Membership in K decoded from a solution set");
    decode_app->add_option("--context", decode_cmd.context_path, "decoding context file")
        ->required();
    decode_app->add_option("--x", decode_cmd.x, "single query");
    decode_app->add_option("--upto", decode_cmd.upto, "sweep x = 0 .. upto-1")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw InvalidInput(e.what());
    }

    if (profile_app->parsed()) {
        parse_nat(profile.n, "profile");
        return profile;
    }
    if (witness_app->parsed()) {
        checked_pattern(witness.pattern);
        return witness;
    }
    if (find_app->parsed()) {
        checked_pattern(find_config.pattern);
        return find_config;
    }
    if (solve_app->parsed()) {
        checked_pattern(solve_cmd.pattern);
        return solve_cmd;
    }
    if (vsg_app->parsed()) {
        parse_nat(vsg.n, "vsg");
        return vsg;
    }
    if (claims_app->parsed()) {
        bool identity = !claims.m.empty() || !claims.n.empty();
        bool parity = !claims.solution_path.empty();
        if (identity == parity)
            throw InvalidInput("claims: pass either --m with --n, or --solution");
        if (identity && (claims.m.empty() || claims.n.empty()))
            throw InvalidInput("claims: the identity check needs both --m and --n");
        if (identity) {
            parse_nat(claims.m, "claims --m");
            parse_nat(claims.n, "claims --n");
        }
        return claims;
    }
    if (decode_app->parsed()) {
        if (decode_cmd.x.has_value() == decode_cmd.upto.has_value())
            throw InvalidInput("decode: pass exactly one of --x or --upto");
        return decode_cmd;
    }
    throw InvalidInput("no sub-command given");
}

// ----------------------------------------------------------- execution ----

struct LoadedColoring {
    Coloring coloring;
    std::string ref;
};

LoadedColoring resolve_coloring(const std::string& spec, Report& report) {
    if (spec == "parity") return {parity_coloring(), spec};
    if (spec == "popcount-parity") return {popcount_parity_coloring(), spec};
    if (spec.rfind("const:", 0) == 0) {
        int value = 0;
        try {
            value = std::stoi(spec.substr(6));
        } catch (const std::exception&) {
            throw InvalidInput("coloring spec: bad constant in \"" + spec + "\"");
        }
        if (value < 0 || value > 1)
            throw InvalidInput("coloring spec: const value must be 0 or 1 in \"" + spec + "\"");
        return {constant_coloring(2, static_cast<Color>(value)), spec};
    }
    if (spec.rfind("vsg:", 0) == 0) {
        std::string path = spec.substr(4);
        std::string text = read_file(path);
        report.input_digests[path] = fnv1a_hex(text);
        lowerbound::EnumerationSchedule schedule;
        try {
            schedule = lowerbound::EnumerationSchedule::parse(text);
        } catch (const std::domain_error& e) {
            throw InvalidInput(e.what());
        }
        return {lowerbound::vsg_coloring(schedule, spec), spec};
    }
    if (spec.rfind("table:", 0) == 0) {
        std::string path = spec.substr(6);
        std::string text = read_file(path);
        report.input_digests[path] = fnv1a_hex(text);
        try {
            return {oracles::TableColoring::parse(text).as_coloring(), spec};
        } catch (const std::domain_error& e) {
            throw InvalidInput(e.what());
        }
    }
    throw InvalidInput("unknown coloring spec \"" + spec + "\"");
}

lowerbound::EnumerationSchedule load_schedule(const std::string& path, Report& report) {
    std::string text = read_file(path);
    report.input_digests[path] = fnv1a_hex(text);
    try {
        return lowerbound::EnumerationSchedule::parse(text);
    } catch (const std::domain_error& e) {
        throw InvalidInput(e.what());
    }
}

Report execute_profile(const ProfileCmd& cmd) {
    Report report;
    report.verb = "profile";
    BigNat n = parse_nat(cmd.n, "profile");
    if (n.is_zero()) throw InvalidInput("profile: n must be >= 1");
    BitProfile profile = bit_profile(n);
    report.payload["n"] = n.to_decimal();
    report.payload["exponents"] = profile.exponents;
    report.payload["lambda"] = profile.lambda;
    report.payload["mu"] = profile.mu;
    ordered_json gaps = ordered_json::array();
    for (const Gap& g : profile.gaps) gaps.push_back({g.first, g.second});
    report.payload["gaps"] = std::move(gaps);
    return report;
}

Report execute_witness(const WitnessCmd& cmd) {
    Report report;
    report.verb = "witness";
    report.budgets["max_n"] = cmd.max_n;
    report.budgets["budget_steps"] = cmd.budget_steps;

    LengthPattern pattern = checked_pattern(cmd.pattern);
    oracles::SearchStrategy strategy = cmd.strategy == "full"
                                           ? oracles::SearchStrategy::full_enumeration
                                           : oracles::SearchStrategy::incremental_dfs;
    oracles::WitnessResult result = oracles::witness_number(
        pattern, cmd.colors, cmd.max_n, strategy, {cmd.budget_steps, cmd.workers});

    report.payload["pattern"] = pattern.to_string();
    report.payload["colors"] = cmd.colors;
    report.payload["strategy"] = cmd.strategy;
    switch (result.status) {
        case oracles::WitnessStatus::exact:
            report.status = ReportStatus::ok;
            report.payload["status"] = "exact";
            break;
        case oracles::WitnessStatus::lower_bound_only:
            report.status = ReportStatus::not_found;
            report.payload["status"] = "lower_bound_only";
            break;
        case oracles::WitnessStatus::budget_exceeded:
            report.status = ReportStatus::budget_exceeded;
            report.payload["status"] = "budget_exceeded";
            break;
    }
    report.payload["value"] = result.value;
    report.payload["exact"] = result.status == oracles::WitnessStatus::exact;
    std::string cert = result.certificate.to_text();
    // The trailing newline stays in the file form; the payload keeps the
    // exact bytes minus that final break.
    report.payload["certificate"] = cert.substr(0, cert.size() - 1);
    report.payload["steps"] = result.steps_used;
    if (!cmd.cert_out.empty()) {
        write_file(cmd.cert_out, cert);
        report.payload["certificate_file"] = cmd.cert_out;
    }
    return report;
}

Report execute_find_config(const FindConfigCmd& cmd) {
    Report report;
    report.verb = "find-config";
    LengthPattern pattern = checked_pattern(cmd.pattern);
    std::string text = read_file(cmd.table_path);
    report.input_digests[cmd.table_path] = fnv1a_hex(text);
    oracles::TableColoring table = [&] {
        try {
            return oracles::TableColoring::parse(text);
        } catch (const std::domain_error& e) {
            throw InvalidInput(e.what());
        }
    }();

    report.payload["pattern"] = pattern.to_string();
    report.payload["r"] = table.colors();
    report.payload["n"] = table.size();
    std::optional<oracles::ConfigWitness> witness = oracles::find_mono_config(table, pattern);
    if (!witness) {
        report.status = ReportStatus::not_found;
        report.payload["found"] = false;
        return report;
    }
    report.payload["found"] = true;
    report.payload["params"] = params_json(pattern, witness->params);
    report.payload["color"] = witness->color;
    report.payload["instance"] = witness->instance;
    return report;
}

Report execute_solve(const SolveCmd& cmd) {
    Report report;
    report.verb = "solve";
    report.budgets["budget_steps"] = cmd.budget_steps;
    report.budgets["core_max_n"] = cmd.core_max_n;
    report.budgets["core_budget_steps"] = cmd.core_budget_steps;
    // Element sizes are bounded by the ground, so the bit budget of a run is
    // part of its record.
    if (cmd.ground_file.empty()) {
        report.budgets["ground_count"] = cmd.ground_count;
        report.budgets["ground_start"] = cmd.ground_start;
        report.budgets["ground_stride"] = cmd.ground_stride;
    }
    report.budgets["target_size"] = cmd.target_size;

    LengthPattern pattern = checked_pattern(cmd.pattern);
    LoadedColoring loaded = resolve_coloring(cmd.coloring, report);

    solver::SolveConfig cfg;
    if (cmd.mode == "direct") cfg.mode = solver::SolveMode::direct;
    else if (cmd.mode == "pipeline") cfg.mode = solver::SolveMode::pipeline;
    else cfg.mode = solver::SolveMode::iterated;
    if (!cmd.ground_file.empty()) {
        std::string text = read_file(cmd.ground_file);
        report.input_digests[cmd.ground_file] = fnv1a_hex(text);
        std::vector<BigNat> elements;
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            elements.push_back(parse_nat(line, "ground-file"));
        }
        try {
            cfg.ground = ApartSet(std::move(elements));
        } catch (const std::domain_error& e) {
            throw InvalidInput(std::string("ground-file: ") + e.what());
        }
    } else {
        cfg.ground = apart_ground(cmd.ground_count, cmd.ground_start, cmd.ground_stride);
    }
    cfg.target_size = cmd.target_size;
    cfg.budget_steps = cmd.budget_steps;
    cfg.workers = cmd.workers;
    cfg.core_max_n = cmd.core_max_n;
    cfg.core_budget_steps = cmd.core_budget_steps;
    cfg.stage_slack = cmd.stage_slack;

    solver::SolveOutcome outcome = [&] {
        try {
            return solver::solve(loaded.coloring, pattern, cfg);
        } catch (const std::domain_error& e) {
            throw InvalidInput(e.what());
        }
    }();

    report.payload["pattern"] = pattern.to_string();
    report.payload["coloring_ref"] = loaded.ref;
    report.payload["mode"] = cmd.mode;
    switch (outcome.status) {
        case solver::SolveStatus::found:
            report.status = ReportStatus::ok;
            report.payload["status"] = "found";
            break;
        case solver::SolveStatus::not_found:
            report.status = ReportStatus::not_found;
            report.payload["status"] = "not_found";
            break;
        case solver::SolveStatus::budget_exceeded:
            report.status = ReportStatus::budget_exceeded;
            report.payload["status"] = "budget_exceeded";
            break;
        case solver::SolveStatus::core_witness_unavailable:
            report.status = ReportStatus::not_found;
            report.payload["status"] = "core_witness_unavailable";
            break;
    }
    if (outcome.core_k != 0) report.payload["core_k"] = outcome.core_k;
    if (!outcome.detail.empty()) report.payload["detail"] = outcome.detail;
    report.payload["steps"] = outcome.steps_used;
    if (outcome.solution) {
        const solver::Solution& sol = *outcome.solution;
        bool verified = solver::verify_solution(loaded.coloring, sol).ok;
        std::string doc = solver::solution_to_json(sol, loaded.ref, verified, cmd.mode,
                                                   outcome.steps_used);
        report.payload["solution"] = ordered_json::parse(doc);
        if (!cmd.out.empty()) {
            write_file(cmd.out, doc);
            report.payload["solution_file"] = cmd.out;
        }
    }
    return report;
}

Report execute_vsg(const VsgCmd& cmd) {
    Report report;
    report.verb = "vsg";
    lowerbound::EnumerationSchedule schedule = load_schedule(cmd.schedule_path, report);
    BigNat n = parse_nat(cmd.n, "vsg");
    if (n.is_zero()) throw InvalidInput("vsg: n must be >= 1");
    lowerbound::GapClassification g = lowerbound::classify_gaps(n, schedule);
    report.payload["n"] = n.to_decimal();
    report.payload["SG"] = gaps_json(g.short_gaps);
    report.payload["VSG"] = gaps_json(g.very_short_gaps);
    report.payload["color"] = lowerbound::vsg_color(schedule, n);
    return report;
}

Report execute_claims(const ClaimsCmd& cmd) {
    Report report;
    report.verb = "claims";
    lowerbound::EnumerationSchedule schedule = load_schedule(cmd.schedule_path, report);

    if (!cmd.m.empty()) {
        BigNat m = parse_nat(cmd.m, "claims --m");
        BigNat n = parse_nat(cmd.n, "claims --n");
        lowerbound::SumIdentityReport identity = [&] {
            try {
                return lowerbound::check_sum_identity(m, n, schedule);
            } catch (const std::domain_error& e) {
                throw InvalidInput(e.what());
            }
        }();
        report.payload["m"] = m.to_decimal();
        report.payload["n"] = n.to_decimal();
        report.payload["conditions"] =
            ordered_json{identity.conditions.mu_below_lambda, identity.conditions.membership_settled,
                         identity.conditions.mu_sum_preserved};
        report.payload["VSG_sum"] = gaps_json(identity.vsg_sum);
        report.payload["SG_m"] = gaps_json(identity.sg_m);
        report.payload["VSG_n"] = gaps_json(identity.vsg_n);
        report.payload["holds"] = identity.holds;
        return report;
    }

    std::string text = read_file(cmd.solution_path);
    report.input_digests[cmd.solution_path] = fnv1a_hex(text);
    solver::SolutionDocument doc = [&] {
        try {
            return solver::solution_from_json(text);
        } catch (const std::domain_error& e) {
            throw InvalidInput(e.what());
        }
    }();
    if (!doc.solution.pattern.uses_ab())
        throw InvalidInput("claims: the parity sweep needs an (a, b) family solution");
    lowerbound::ParityCheckOutcome parity = lowerbound::claims_parity_check(
        doc.solution.H, doc.solution.params.a, doc.solution.params.b, schedule);
    report.payload["a"] = doc.solution.params.a;
    report.payload["b"] = doc.solution.params.b;
    report.payload["checked"] = parity.checked;
    report.payload["skipped_no_partner"] = parity.skipped_no_partner;
    ordered_json violations = ordered_json::array();
    for (const BigNat& v : parity.violations) violations.push_back(v.to_decimal());
    report.payload["violations"] = std::move(violations);
    report.payload["ok"] = parity.ok();
    return report;
}

Report execute_decode(const DecodeCmd& cmd) {
    Report report;
    report.verb = "decode";
    std::string text = read_file(cmd.context_path);
    report.input_digests[cmd.context_path] = fnv1a_hex(text);
    lowerbound::ParsedDecodingContext parsed = [&] {
        try {
            return lowerbound::decoding_context_from_json(text);
        } catch (const std::domain_error& e) {
            throw InvalidInput(e.what());
        }
    }();
    std::string schedule_path = sibling_path(cmd.context_path, parsed.schedule_ref);
    lowerbound::EnumerationSchedule schedule = load_schedule(schedule_path, report);
    lowerbound::DecodingContext ctx = [&] {
        try {
            return lowerbound::DecodingContext::make(parsed.H, parsed.a, parsed.b, schedule);
        } catch (const std::domain_error& e) {
            throw InvalidInput(e.what());
        }
    }();

    report.payload["a"] = ctx.a;
    report.payload["b"] = ctx.b;
    report.payload["schedule_ref"] = parsed.schedule_ref;
    try {
        if (cmd.x) {
            lowerbound::DecodeOutcome d = lowerbound::decode(ctx, *cmd.x);
            report.payload["x"] = *cmd.x;
            report.payload["member"] = d.member;
            report.payload["m"] = d.m.to_decimal();
            report.payload["n"] = d.n.to_decimal();
            report.payload["lambda_n"] = d.lambda_n;
        } else {
            ordered_json results = ordered_json::array();
            for (std::uint64_t x = 0; x < *cmd.upto; ++x) {
                lowerbound::DecodeOutcome d = lowerbound::decode(ctx, x);
                results.push_back(ordered_json{{"x", x}, {"member", d.member}});
            }
            report.payload["results"] = std::move(results);
        }
    } catch (const lowerbound::InsufficientWitnessError& e) {
        report.status = ReportStatus::not_found;
        report.payload["error"] = e.what();
    }
    return report;
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << hash;
    return os.str();
}

Command parse_command(const std::vector<std::string>& args) {
    return build_parser_and_parse(args);
}

int Report::exit_code() const {
    switch (status) {
        case ReportStatus::ok:
            return 0;
        case ReportStatus::not_found:
        case ReportStatus::budget_exceeded:
            return 1;
        case ReportStatus::invalid_input:
            return 2;
    }
    return 2;
}

std::string Report::to_json() const {
    ordered_json doc;
    switch (status) {
        case ReportStatus::ok:
            doc["status"] = "ok";
            break;
        case ReportStatus::not_found:
            doc["status"] = "not_found";
            break;
        case ReportStatus::budget_exceeded:
            doc["status"] = "budget_exceeded";
            break;
        case ReportStatus::invalid_input:
            doc["status"] = "invalid_input";
            break;
    }
    doc["verb"] = verb;
    doc["payload"] = payload;
    ordered_json inputs = ordered_json::object();
    for (const auto& [path, digest] : input_digests) inputs[path] = digest;
    doc["provenance"] =
        ordered_json{{"version", kVersion}, {"inputs", std::move(inputs)}, {"budgets", budgets}};
    return doc.dump(2) + "\n";
}

Report execute(const Command& cmd) {
    return std::visit(
        [](const auto& c) -> Report {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ProfileCmd>) return execute_profile(c);
            else if constexpr (std::is_same_v<T, WitnessCmd>) return execute_witness(c);
            else if constexpr (std::is_same_v<T, FindConfigCmd>) return execute_find_config(c);
            else if constexpr (std::is_same_v<T, SolveCmd>) return execute_solve(c);
            else if constexpr (std::is_same_v<T, VsgCmd>) return execute_vsg(c);
            else if constexpr (std::is_same_v<T, ClaimsCmd>) return execute_claims(c);
            else return execute_decode(c);
        },
        cmd);
}

Report run(const std::vector<std::string>& args) {
    try {
        Command cmd = parse_command(args);
        return execute(cmd);
    } catch (const HelpRequested&) {
        throw;  // the caller prints help text, not a report
    } catch (const InvalidInput& e) {
        Report report;
        report.status = ReportStatus::invalid_input;
        report.verb = args.empty() ? "" : args.front();
        report.payload["error"] = e.what();
        return report;
    } catch (const std::exception& e) {
        Report report;
        report.status = ReportStatus::invalid_input;
        report.verb = args.empty() ? "" : args.front();
        report.payload["error"] = e.what();
        return report;
    }
}

}  // namespace hindman::cli
