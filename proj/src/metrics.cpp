#include "mwsearch/metrics.hpp"

#include <sstream>

#include "mwsearch/engines.hpp"

namespace mwsearch {

std::string Metrics::summary() const {
    std::ostringstream out;
    out << "iterations:             " << iterations << "\n"
        << "text_reads:             " << text_reads << "\n"
        << "table_reads:            " << table_reads << "\n"
        << "verifications:          " << verifications << "\n"
        << "verify_symbol_compares: " << verify_symbol_compares << "\n"
        << "total_shift:            " << total_shift << "\n"
        << "mean_shift:             " << mean_shift() << "\n"
        << "shift_histogram:       ";
    for (const auto& [value, count] : shift_histogram) out << " " << value << ":" << count;
    out << "\n";
    return out.str();
}

// Operation counts for advancing the window by 2m in the most favorable
// case: two plain single-window iterations versus one double-window
// iteration. A 1-D access D[x] costs one addition and two memory reads;
// a 2-D access D2[x][y] costs two additions, one multiplication and
// three reads, with the row stride held as a constant.
OpCounts cost_model(CostCase c) {
    switch (c) {
        case CostCase::BmhTwoIterationsMaxShift:
            return OpCounts{.comparisons = 4,
                            .assignments = 4,
                            .memory_reads = 28,
                            .additions = 14,
                            .multiplications = 0};
        case CostCase::DwOneIterationMaxShift:
            return OpCounts{.comparisons = 2,
                            .assignments = 2,
                            .memory_reads = 10,
                            .additions = 6,
                            .multiplications = 1};
    }
    return OpCounts{};
}

std::pair<MatchSet, Metrics> collect_metrics(const EngineSpec& spec, const SearchBuffer& buffer,
                                             const Pattern& pattern, const EngineTables& tables) {
    if (!spec.instrumented)
        throw InvalidSpec("collect_metrics requires an instrumented engine spec");
    Metrics metrics;
    MatchSet matches = dispatch_engine(spec, buffer, pattern, tables, &metrics);
    return {std::move(matches), std::move(metrics)};
}

}  // namespace mwsearch
