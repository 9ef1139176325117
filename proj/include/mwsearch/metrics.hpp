#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace mwsearch {

/// Runtime event counters for an instrumented search. text_reads counts
/// logical indexed fetches from the buffer and table_reads counts shift
/// table fetches; one N-window lookup contributes N text reads plus one
/// table read. total_shift accumulates every advance, so after a
/// completed search it equals the final window start.
struct Metrics {
    std::uint64_t iterations = 0;
    std::uint64_t text_reads = 0;
    std::uint64_t table_reads = 0;
    std::uint64_t verifications = 0;
    std::uint64_t verify_symbol_compares = 0;
    std::uint64_t total_shift = 0;
    std::map<std::uint64_t, std::uint64_t> shift_histogram;

    double mean_shift() const {
        std::uint64_t shifts = 0;
        for (const auto& [value, count] : shift_histogram) shifts += count;
        return shifts == 0 ? 0.0 : static_cast<double>(total_shift) / static_cast<double>(shifts);
    }

    std::string summary() const;
};

/// Static operation counts for one maximum-shift scenario of a search
/// cycle, split by operation category.
struct OpCounts {
    unsigned comparisons = 0;
    unsigned assignments = 0;
    unsigned memory_reads = 0;
    unsigned additions = 0;
    unsigned multiplications = 0;

    unsigned total() const {
        return comparisons + assignments + memory_reads + additions + multiplications;
    }
};

enum class CostCase {
    /// Two single-window iterations advancing 2m in total.
    BmhTwoIterationsMaxShift,
    /// One double-window iteration advancing 2m at once.
    DwOneIterationMaxShift,
};

/// Fixed per-scenario operation counts of the reference cost analysis.
OpCounts cost_model(CostCase c);

}  // namespace mwsearch
