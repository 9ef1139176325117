#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mwsearch/engines.hpp"

namespace mwsearch {

/// One benchmark experiment: a seeded random corpus searched by every
/// listed engine over every pattern length. The seed fixes the corpus
/// and all patterns, so two runs of the same config see identical inputs.
struct BenchConfig {
    unsigned sigma = 32;
    std::size_t text_size = 1 << 20;
    std::vector<std::size_t> m_list;
    std::vector<EngineSpec> algs;
    unsigned reps = 100;
    unsigned patterns_per_cell = 10;
    std::uint64_t seed = 1;
    unsigned warmup = 1;
    std::uint64_t table_cap_bytes = kDefaultTableCapBytes;
};

struct BenchRow {
    std::string alg;
    unsigned sigma = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    unsigned reps = 0;
    double total_seconds = 0.0;
    double seconds_per_rep = 0.0;
    std::uint64_t match_count = 0;
    double mean_shift = 0.0;
    double table_build_seconds = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

enum class ReportFormat { Csv, Table };

/// Uniform random symbols below sigma, one splitmix64 draw per byte.
std::vector<Byte> gen_random_text(unsigned sigma, std::size_t size, std::uint64_t seed);

/// Times `reps` search passes per cell (table construction reported
/// separately), spreading the repetitions over patterns_per_cell random
/// patterns shared by all engines in the cell.
BenchReport run_bench(const BenchConfig& config);

/// Csv: fixed header plus one row per cell, six fractional digits.
/// Table: rows by pattern length, one column per engine, total seconds.
std::string emit_report(const BenchReport& report, ReportFormat format);

}  // namespace mwsearch
