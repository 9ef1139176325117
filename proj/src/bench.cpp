#include "mwsearch/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "mwsearch/rng.hpp"

namespace mwsearch {

namespace {

using Clock = std::chrono::steady_clock;

volatile std::uint64_t g_bench_sink = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Deterministic per-(m, index) pattern seed so every engine in a cell
// sees the same patterns regardless of evaluation order.
std::uint64_t pattern_seed(std::uint64_t seed, std::size_t m, unsigned index) {
    SplitMix64 g(seed ^ (0x811C9DC5ull + m * 0x100000001B3ull +
                         static_cast<std::uint64_t>(index) * 0x9E3779B97F4A7C15ull));
    return g.next();
}

void validate_config(const BenchConfig& config) {
    if (config.sigma < 2 || config.sigma > 256)
        throw ConfigError("sigma must be in [2, 256]");
    if (config.reps < 1) throw ConfigError("reps must be >= 1");
    if (config.patterns_per_cell < 1) throw ConfigError("patterns_per_cell must be >= 1");
    if (config.m_list.empty()) throw ConfigError("no pattern lengths given");
    if (config.algs.empty()) throw ConfigError("no algorithms given");
    for (std::size_t m : config.m_list) {
        if (m < 1) throw ConfigError("pattern length must be >= 1");
        if (m > config.text_size)
            throw ConfigError("text size " + std::to_string(config.text_size) +
                              " is smaller than pattern length " + std::to_string(m));
    }
}

std::string format_row_csv(const BenchRow& r) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%u,%zu,%zu,%u,%.6f,%.6f,%llu,%.6f,%.6f", r.alg.c_str(),
                  r.sigma, r.m, r.n, r.reps, r.total_seconds, r.seconds_per_rep,
                  static_cast<unsigned long long>(r.match_count), r.mean_shift,
                  r.table_build_seconds);
    return buf;
}

}  // namespace

std::vector<Byte> gen_random_text(unsigned sigma, std::size_t size, std::uint64_t seed) {
    if (sigma < 2 || sigma > 256)
        throw InvalidArgument("alphabet size must be in [2, 256], got " + std::to_string(sigma));
    SplitMix64 rng(seed);
    std::vector<Byte> text(size);
    for (Byte& b : text) b = static_cast<Byte>(rng.next() % sigma);
    return text;
}

BenchReport run_bench(const BenchConfig& config) {
    validate_config(config);
    const Alphabet alphabet(config.sigma);
    const std::vector<Byte> text = gen_random_text(config.sigma, config.text_size, config.seed);

    BenchReport report;
    std::uint64_t sink = 0;  // keeps timed search results observable

    for (std::size_t m : config.m_list) {
        std::vector<Pattern> patterns;
        patterns.reserve(config.patterns_per_cell);
        for (unsigned i = 0; i < config.patterns_per_cell; ++i) {
            patterns.emplace_back(gen_random_text(config.sigma, m, pattern_seed(config.seed, m, i)),
                                  alphabet);
        }

        for (const EngineSpec& alg : config.algs) {
            BenchRow row;
            row.alg = engine_name(alg);
            row.sigma = config.sigma;
            row.m = m;
            row.n = config.text_size;
            row.reps = config.reps;

            std::uint64_t shift_sum = 0;
            std::uint64_t shift_events = 0;

            for (unsigned i = 0; i < config.patterns_per_cell; ++i) {
                const Pattern& pattern = patterns[i];

                const auto build_start = Clock::now();
                EngineTables tables = build_tables(alg, pattern, alphabet, config.table_cap_bytes);
                row.table_build_seconds += seconds_since(build_start);

                const unsigned buffer_windows =
                    alg.kind == EngineKind::MultiWindow ? alg.windows : 1;
                SearchBuffer buffer = make_search_buffer(text, pattern, buffer_windows);

                // Correctness pass, untimed: match count and shift stats.
                EngineSpec probe = alg;
                probe.instrumented = true;
                auto [matches, metrics] = collect_metrics(probe, buffer, pattern, tables);
                row.match_count += matches.size();
                shift_sum += metrics.total_shift;
                for (const auto& [value, count] : metrics.shift_histogram) shift_events += count;

                unsigned reps_here = config.reps / config.patterns_per_cell +
                                     (i < config.reps % config.patterns_per_cell ? 1 : 0);
                for (unsigned w = 0; w < config.warmup; ++w)
                    sink += dispatch_engine(alg, buffer, pattern, tables).size();

                const auto start = Clock::now();
                for (unsigned rep = 0; rep < reps_here; ++rep)
                    sink += dispatch_engine(alg, buffer, pattern, tables).size();
                row.total_seconds += seconds_since(start);
            }

            row.seconds_per_rep = row.total_seconds / config.reps;
            row.mean_shift = shift_events == 0 ? 0.0
                                               : static_cast<double>(shift_sum) /
                                                     static_cast<double>(shift_events);
            report.rows.push_back(std::move(row));
        }
    }

    g_bench_sink = sink;
    return report;
}

std::string emit_report(const BenchReport& report, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::string out =
            "alg,sigma,m,n,reps,total_seconds,seconds_per_rep,match_count,mean_shift,"
            "table_build_seconds\n";
        for (const BenchRow& row : report.rows) {
            out += format_row_csv(row);
            out += '\n';
        }
        return out;
    }

    // Grid: one row per pattern length, one column per engine, total seconds.
    std::vector<std::size_t> m_values;
    std::vector<std::string> algs;
    for (const BenchRow& row : report.rows) {
        if (std::find(m_values.begin(), m_values.end(), row.m) == m_values.end())
            m_values.push_back(row.m);
        if (std::find(algs.begin(), algs.end(), row.alg) == algs.end()) algs.push_back(row.alg);
    }

    auto cell = [&](std::size_t m, const std::string& alg) -> std::string {
        for (const BenchRow& row : report.rows) {
            if (row.m == m && row.alg == alg) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.3f", row.total_seconds);
                return buf;
            }
        }
        return "-";
    };

    const int width = 12;
    char buf[64];
    std::string out;
    std::snprintf(buf, sizeof(buf), "%-6s", "m");
    out += buf;
    for (const std::string& alg : algs) {
        std::snprintf(buf, sizeof(buf), "%*s", width, alg.c_str());
        out += buf;
    }
    out += '\n';
    for (std::size_t m : m_values) {
        std::snprintf(buf, sizeof(buf), "%-6zu", m);
        out += buf;
        for (const std::string& alg : algs) {
            std::snprintf(buf, sizeof(buf), "%*s", width, cell(m, alg).c_str());
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace mwsearch
