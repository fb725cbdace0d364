#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hindman/coloring.hpp"

namespace hindman::cli {

/// Raised for anything the driver cannot act on: unknown verbs, malformed
/// pattern specs, missing files. The message names the offending token.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ProfileCmd {
    std::string n;
};

struct WitnessCmd {
    std::string pattern;
    Color colors = 2;
    std::uint32_t max_n = 32;
    std::string strategy = "dfs";  // dfs | full
    std::uint64_t budget_steps = 500'000'000;
    unsigned workers = 1;
    std::string cert_out;
};

struct FindConfigCmd {
    std::string table_path;
    std::string pattern;
};

struct SolveCmd {
    std::string pattern;
    std::string coloring;  // const:<c> | parity | popcount-parity | vsg:<file> | table:<file>
    std::string mode = "direct";
    std::size_t ground_count = 12;
    std::uint64_t ground_start = 0;
    std::uint64_t ground_stride = 1;
    std::string ground_file;
    std::size_t target_size = 0;
    std::uint64_t budget_steps = 500'000'000;
    unsigned workers = 1;
    std::uint32_t core_max_n = 64;
    std::uint64_t core_budget_steps = 500'000'000;
    std::size_t stage_slack = 0;
    std::string out;
};

struct VsgCmd {
    std::string schedule_path;
    std::string n;
};

struct ClaimsCmd {
    std::string schedule_path;
    std::string m;  // identity check when m and n are given
    std::string n;
    std::string solution_path;  // parity sweep over a solution document
};

struct DecodeCmd {
    std::string context_path;
    std::optional<std::uint64_t> x;
    std::optional<std::uint64_t> upto;
};

using Command = std::variant<ProfileCmd, WitnessCmd, FindConfigCmd, SolveCmd, VsgCmd, ClaimsCmd,
                             DecodeCmd>;

/// Parses argv (without the program name). Throws InvalidInput on anything
/// malformed and HelpRequested when --help was asked for.
Command parse_command(const std::vector<std::string>& args);

class HelpRequested : public std::runtime_error {
public:
    explicit HelpRequested(std::string text) : std::runtime_error(std::move(text)) {}
};

enum class ReportStatus { ok, not_found, budget_exceeded, invalid_input };

struct Report {
    ReportStatus status = ReportStatus::ok;
    std::string verb;
    nlohmann::ordered_json payload;
    std::map<std::string, std::string> input_digests;
    nlohmann::ordered_json budgets = nlohmann::ordered_json::object();

    int exit_code() const;
    /// The full envelope, byte-stable for identical inputs and budgets.
    std::string to_json() const;
};

/// Dispatches a parsed command to the library and packages the result.
Report execute(const Command& cmd);

/// parse + execute with every failure folded into a Report.
Report run(const std::vector<std::string>& args);

/// FNV-1a 64-bit digest, hex encoded; used for input provenance.
std::string fnv1a_hex(const std::string& bytes);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hindman::cli
