#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace hindman::lowerbound {

/// A finite staged enumeration simulating a computably enumerable set K.
/// Entry (s, x) means x is enumerated into K at stage s. Stages are strictly
/// increasing, elements pairwise distinct; both are known in full, which is
/// what makes the short-gap side computable here while the very-short-gap
/// side stays computable from a bounded stage prefix (see gaps.hpp).
///
/// Text format (bit-exact): one "stage element" pair per line.
class EnumerationSchedule {
public:
    struct Entry {
        std::uint64_t stage;
        std::uint64_t element;
        bool operator==(const Entry&) const = default;
    };

    EnumerationSchedule() = default;
    explicit EnumerationSchedule(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    /// Largest stage in the schedule; 0 when empty.
    std::uint64_t max_stage() const { return entries_.empty() ? 0 : entries_.back().stage; }

    /// Membership of x in K (the full enumerated set).
    bool in_k(std::uint64_t x) const;
    /// Membership of x in K[k], the set enumerated within k stages.
    bool in_k_at(std::uint64_t x, std::uint64_t k) const;

    /// The schedule with every entry of stage > k dropped.
    EnumerationSchedule truncated(std::uint64_t k) const;

    std::string to_text() const;
    static EnumerationSchedule parse(const std::string& text);
    static EnumerationSchedule load(const std::string& path);
    void save(const std::string& path) const;

    bool operator==(const EnumerationSchedule&) const = default;

private:
    std::vector<Entry> entries_;
};

/// K[k] as a plain set: every element whose stage is <= k.
std::set<std::uint64_t> k_at(const EnumerationSchedule& schedule, std::uint64_t k);

/// K itself (the schedule is finite, so K is just the full element set).
std::set<std::uint64_t> k_full(const EnumerationSchedule& schedule);

}  // namespace hindman::lowerbound
