#include "hindman/lowerbound/schedule.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace hindman::lowerbound {

EnumerationSchedule::EnumerationSchedule(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0 && entries_[i - 1].stage >= entries_[i].stage)
            throw std::domain_error("EnumerationSchedule: stages must be strictly increasing");
        if (!seen.insert(entries_[i].element).second)
            throw std::domain_error("EnumerationSchedule: elements must be pairwise distinct");
    }
}

bool EnumerationSchedule::in_k(std::uint64_t x) const {
    for (const Entry& e : entries_)
        if (e.element == x) return true;
    return false;
}

bool EnumerationSchedule::in_k_at(std::uint64_t x, std::uint64_t k) const {
    for (const Entry& e : entries_) {
        if (e.stage > k) return false;  // stages ascend
        if (e.element == x) return true;
    }
    return false;
}

EnumerationSchedule EnumerationSchedule::truncated(std::uint64_t k) const {
    std::vector<Entry> kept;
    for (const Entry& e : entries_)
        if (e.stage <= k) kept.push_back(e);
    return EnumerationSchedule(std::move(kept));
}

std::string EnumerationSchedule::to_text() const {
    std::ostringstream os;
    for (const Entry& e : entries_) os << e.stage << ' ' << e.element << '\n';
    return os.str();
}

EnumerationSchedule EnumerationSchedule::parse(const std::string& text) {
    std::vector<Entry> entries;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::int64_t stage = -1, element = -1;
        std::string trailing;
        if (!(ls >> stage >> element) || stage < 0 || element < 0 || (ls >> trailing))
            throw std::domain_error("EnumerationSchedule::parse: malformed line " +
                                    std::to_string(lineno) + ": \"" + line + "\"");
        entries.push_back({static_cast<std::uint64_t>(stage), static_cast<std::uint64_t>(element)});
    }
    return EnumerationSchedule(std::move(entries));
}

EnumerationSchedule EnumerationSchedule::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("EnumerationSchedule::load: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

void EnumerationSchedule::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::domain_error("EnumerationSchedule::save: cannot open " + path);
    out << to_text();
}

std::set<std::uint64_t> k_at(const EnumerationSchedule& schedule, std::uint64_t k) {
    std::set<std::uint64_t> out;
    for (const auto& e : schedule.entries()) {
        if (e.stage > k) break;
        out.insert(e.element);
    }
    return out;
}

std::set<std::uint64_t> k_full(const EnumerationSchedule& schedule) {
    std::set<std::uint64_t> out;
    for (const auto& e : schedule.entries()) out.insert(e.element);
    return out;
}

}  // namespace hindman::lowerbound
