#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "mwsearch/bench.hpp"
#include "mwsearch/errors.hpp"
#include "oracles.hpp"

using namespace mwsearch;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

BenchConfig small_config() {
    BenchConfig c;
    c.sigma = 16;
    c.text_size = 20000;
    c.m_list = {3, 5};
    c.algs = {parse_engine_name("bmh"), parse_engine_name("qs"), parse_engine_name("mw2"),
              parse_engine_name("mw3u")};
    c.reps = 3;
    c.patterns_per_cell = 2;
    c.seed = 5;
    c.warmup = 1;
    return c;
}

}  // namespace

TEST_CASE("random corpus generation is the seeded stream reduced mod sigma") {
    const auto text = gen_random_text(8, 64, 42);
    REQUIRE(text.size() == 64);
    std::uint64_t state = 42;
    for (std::size_t i = 0; i < text.size(); ++i) {
        CHECK(text[i] == static_cast<Byte>(oracle::splitmix64_next(state) % 8));
    }

    CHECK(gen_random_text(8, 64, 42) == text);
    CHECK(gen_random_text(8, 64, 43) != text);
    CHECK(gen_random_text(8, 0, 42).empty());
    CHECK_THROWS_AS(gen_random_text(1, 64, 42), InvalidArgument);
    CHECK_THROWS_AS(gen_random_text(300, 64, 42), InvalidArgument);
}

TEST_CASE("symbol frequencies are near uniform") {
    auto worst_rel = [](unsigned sigma, std::size_t draws, std::uint64_t seed) {
        const auto text = gen_random_text(sigma, draws, seed);
        std::vector<std::size_t> counts(sigma, 0);
        for (Byte b : text) ++counts[b];
        const double expect = double(draws) / sigma;
        double worst = 0.0;
        for (unsigned c = 0; c < sigma; ++c) {
            const double rel = std::abs(double(counts[c]) - expect) / expect;
            worst = std::max(worst, rel);
        }
        return worst;
    };
    // A 1% relative band at 10^6 draws is only ~1.8 binomial sigmas per
    // symbol, so the seed matters; 17 sits well inside the band.
    CHECK(worst_rel(32, 1000000, 17) < 0.01);
    // At 10^7 draws the same band is ~5.7 sigmas and holds for any seed.
    CHECK(worst_rel(32, 10000000, 1) < 0.01);
    CHECK(worst_rel(32, 10000000, 2) < 0.01);
    CHECK(worst_rel(256, 10000000, 3) < 0.02);
}

TEST_CASE("bench report layout and cross-engine agreement") {
    const BenchConfig config = small_config();
    const BenchReport report = run_bench(config);
    REQUIRE(report.rows.size() == config.m_list.size() * config.algs.size());

    // rows grouped by pattern length, engines in the configured order
    std::size_t i = 0;
    for (std::size_t mi = 0; mi < config.m_list.size(); ++mi) {
        for (std::size_t ai = 0; ai < config.algs.size(); ++ai, ++i) {
            const BenchRow& row = report.rows[i];
            CHECK(row.m == config.m_list[mi]);
            CHECK(row.alg == engine_name(config.algs[ai]));
            CHECK(row.sigma == config.sigma);
            CHECK(row.n == config.text_size);
            CHECK(row.reps == config.reps);
            CHECK(row.total_seconds >= 0.0);
            CHECK(row.seconds_per_rep == doctest::Approx(row.total_seconds / row.reps));
            CHECK(row.table_build_seconds >= 0.0);
        }
        // every engine saw the same patterns, so match counts agree
        const auto count0 = report.rows[mi * config.algs.size()].match_count;
        for (std::size_t ai = 1; ai < config.algs.size(); ++ai)
            CHECK(report.rows[mi * config.algs.size() + ai].match_count == count0);
    }

    // a double window outpaces the single-window mean shift
    for (std::size_t mi = 0; mi < config.m_list.size(); ++mi) {
        const auto* rows = &report.rows[mi * config.algs.size()];
        CHECK(rows[2].mean_shift > rows[0].mean_shift);  // mw2 vs bmh
        CHECK(rows[3].mean_shift > rows[2].mean_shift);  // mw3u vs mw2
    }
}

TEST_CASE("csv report format") {
    const BenchReport report = run_bench(small_config());
    const auto lines = lines_of(emit_report(report, ReportFormat::Csv));
    REQUIRE(lines.size() == report.rows.size() + 1);
    CHECK(lines[0] ==
          "alg,sigma,m,n,reps,total_seconds,seconds_per_rep,match_count,mean_shift,"
          "table_build_seconds");
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const std::string& line = lines[i + 1];
        // 10 comma-separated fields, first one the engine name
        CHECK(std::count(line.begin(), line.end(), ',') == 9);
        CHECK(line.rfind(report.rows[i].alg + ",", 0) == 0);
    }
    // fixed-point rendering with six decimals
    CHECK(lines[1].find('.') != std::string::npos);
}

TEST_CASE("table report format") {
    const BenchConfig config = small_config();
    const auto lines = lines_of(emit_report(run_bench(config), ReportFormat::Table));
    REQUIRE(lines.size() == 1 + config.m_list.size());
    CHECK(lines[0].rfind("m", 0) == 0);
    for (const auto& spec : config.algs) {
        CHECK(lines[0].find(engine_name(spec)) != std::string::npos);
    }
    CHECK(lines[1].find("3") != std::string::npos);
    CHECK(lines[2].find("5") != std::string::npos);
}

TEST_CASE("identical seeds reproduce every deterministic column") {
    const BenchConfig config = small_config();
    const BenchReport a = run_bench(config);
    const BenchReport b = run_bench(config);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].alg == b.rows[i].alg);
        CHECK(a.rows[i].match_count == b.rows[i].match_count);
        CHECK(a.rows[i].mean_shift == doctest::Approx(b.rows[i].mean_shift));
    }

    BenchConfig other = config;
    other.seed = 6;
    const BenchReport c = run_bench(other);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        if (a.rows[i].mean_shift != c.rows[i].mean_shift) any_diff = true;
    CHECK(any_diff);
}

TEST_CASE("config validation") {
    BenchConfig c = small_config();
    c.sigma = 1;
    CHECK_THROWS_AS(run_bench(c), ConfigError);
    c = small_config();
    c.reps = 0;
    CHECK_THROWS_AS(run_bench(c), ConfigError);
    c = small_config();
    c.patterns_per_cell = 0;
    CHECK_THROWS_AS(run_bench(c), ConfigError);
    c = small_config();
    c.m_list.clear();
    CHECK_THROWS_AS(run_bench(c), ConfigError);
    c = small_config();
    c.algs.clear();
    CHECK_THROWS_AS(run_bench(c), ConfigError);
    c = small_config();
    c.m_list = {0};
    CHECK_THROWS_AS(run_bench(c), ConfigError);
    c = small_config();
    c.m_list = {c.text_size + 1};
    CHECK_THROWS_AS(run_bench(c), ConfigError);
}
