#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "mwsearch/engines.hpp"
#include "mwsearch/errors.hpp"
#include "oracles.hpp"

using namespace mwsearch;

namespace {

std::vector<Byte> random_bytes(std::mt19937_64& rng, unsigned sigma, std::size_t len) {
    std::uniform_int_distribution<unsigned> dist(0, sigma - 1);
    std::vector<Byte> out(len);
    for (auto& b : out) b = static_cast<Byte>(dist(rng));
    return out;
}

MatchSet run(const EngineSpec& spec, const std::vector<Byte>& text,
             const std::vector<Byte>& pattern, unsigned sigma) {
    return run_engine(spec, text, pattern, Alphabet(sigma)).matches;
}

}  // namespace

TEST_CASE("every engine agrees with the quadratic reference") {
    std::mt19937_64 rng(2024);
    const unsigned sigmas[] = {2, 3, 4, 16, 256};
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const unsigned sigma = sigmas[rng() % 5];
        const std::size_t n = rng() % 300;
        const std::size_t m = 1 + rng() % 12;
        auto text = random_bytes(rng, sigma, n);
        std::vector<Byte> pattern;
        if (n >= m && rng() % 2 == 0) {
            // lift the pattern from the text so matches are guaranteed
            const std::size_t at = rng() % (n - m + 1);
            pattern.assign(text.begin() + at, text.begin() + at + m);
        } else {
            pattern = random_bytes(rng, sigma, m);
        }
        // occasionally plant extra copies to create overlapping matches
        if (n >= 3 * m && rng() % 3 == 0) {
            for (int c = 0; c < 3; ++c) {
                const std::size_t at = rng() % (n - m + 1);
                std::copy(pattern.begin(), pattern.end(), text.begin() + at);
            }
        }

        const auto expect = oracle::find_all(text, pattern);
        CHECK(run({.kind = EngineKind::Sf}, text, pattern, sigma) == expect);
        CHECK(run({.kind = EngineKind::Bmh}, text, pattern, sigma) == expect);
        CHECK(run({.kind = EngineKind::Qs}, text, pattern, sigma) == expect);
        for (unsigned windows : {1u, 2u, 3u, 4u, 5u}) {
            if (table_bytes(sigma, windows, m) > kDefaultTableCapBytes) continue;
            CHECK(run({.kind = EngineKind::MultiWindow, .windows = windows}, text, pattern,
                      sigma) == expect);
            CHECK(run({.kind = EngineKind::MultiWindow, .windows = windows, .unrolled = true},
                      text, pattern, sigma) == expect);
            ++checked;
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("edge shapes: empty text, pattern longer than text, pattern equals text") {
    const std::vector<Byte> empty;
    const std::vector<Byte> one = {1};
    const std::vector<Byte> abc = {0, 1, 2};
    for (EngineSpec spec : {EngineSpec{.kind = EngineKind::Sf}, EngineSpec{.kind = EngineKind::Bmh},
                            EngineSpec{.kind = EngineKind::Qs},
                            EngineSpec{.kind = EngineKind::MultiWindow, .windows = 2},
                            EngineSpec{.kind = EngineKind::MultiWindow, .windows = 3,
                                       .unrolled = true}}) {
        CHECK(run(spec, empty, one, 4).empty());
        CHECK(run(spec, one, abc, 4).empty());
        CHECK(run(spec, abc, abc, 4) == MatchSet{0});
        CHECK(run(spec, one, one, 4) == MatchSet{0});
    }
}

TEST_CASE("empty pattern is rejected") {
    const std::vector<Byte> text = {0, 1, 2};
    CHECK_THROWS_AS(run({.kind = EngineKind::Sf}, text, {}, 4), InvalidArgument);
    CHECK_THROWS_AS(run({.kind = EngineKind::MultiWindow}, text, {}, 4), InvalidArgument);
}

TEST_CASE("match positions are strictly increasing") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        const auto text = random_bytes(rng, 2, 200);
        const auto pattern = random_bytes(rng, 2, 1 + rng() % 3);
        for (unsigned windows : {2u, 4u}) {
            const auto got = run({.kind = EngineKind::MultiWindow, .windows = windows,
                                  .unrolled = trial % 2 == 0},
                                 text, pattern, 2);
            CHECK(std::is_sorted(got.begin(), got.end()));
            CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
            CHECK(got == oracle::find_all(text, pattern));
        }
    }
}

TEST_CASE("single-window mode degenerates to the horspool scan") {
    // Same match sets, and the same shift at every shared alignment. The
    // only divergence is the tail: the windowed loop rides its sentinel
    // until s >= n while the 1-d scan stops past n - m.
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 30; ++trial) {
        const auto text = random_bytes(rng, 8, 500);
        const auto pattern = random_bytes(rng, 8, 4);
        EngineSpec mw1{.kind = EngineKind::MultiWindow, .windows = 1, .instrumented = true};
        EngineSpec bmh{.kind = EngineKind::Bmh, .instrumented = true};
        auto r1 = run_engine(mw1, text, pattern, Alphabet(8));
        auto rb = run_engine(bmh, text, pattern, Alphabet(8));
        CHECK(r1.matches == rb.matches);
        for (const auto& [shift, times] : rb.metrics->shift_histogram) {
            auto it = r1.metrics->shift_histogram.find(shift);
            REQUIRE(it != r1.metrics->shift_histogram.end());
            CHECK(it->second >= times);
        }
        CHECK(r1.metrics->total_shift >= rb.metrics->total_shift);
        CHECK(r1.metrics->total_shift >= text.size());
        CHECK(rb.metrics->total_shift > text.size() - pattern.size());
    }
}

TEST_CASE("unrolled and basic loops see identical shift sequences") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned sigma = 2 + rng() % 30;
        const auto text = random_bytes(rng, sigma, 1000);
        const auto pattern = random_bytes(rng, sigma, 1 + rng() % 8);
        for (unsigned windows : {2u, 3u}) {
            auto basic = run_engine({.kind = EngineKind::MultiWindow, .windows = windows,
                                     .instrumented = true},
                                    text, pattern, Alphabet(sigma));
            auto unrolled = run_engine({.kind = EngineKind::MultiWindow, .windows = windows,
                                        .unrolled = true, .instrumented = true},
                                       text, pattern, Alphabet(sigma));
            CHECK(basic.matches == unrolled.matches);
            // Shift sequences coincide until the unrolled loop breaks at the
            // first sentinel-zone candidate; the basic loop keeps stepping to
            // s >= n. So the unrolled histogram is a prefix sub-multiset.
            for (const auto& [shift, times] : unrolled.metrics->shift_histogram) {
                auto it = basic.metrics->shift_histogram.find(shift);
                REQUIRE(it != basic.metrics->shift_histogram.end());
                CHECK(it->second >= times);
            }
            CHECK(unrolled.metrics->total_shift <= basic.metrics->total_shift);
            CHECK(unrolled.metrics->total_shift > text.size() - pattern.size());
            CHECK(basic.metrics->total_shift >= text.size());
            // at most one extra lookup when the break lands past the text end
            CHECK(unrolled.metrics->iterations <= basic.metrics->iterations + 1);
        }
    }
}

TEST_CASE("shifts never exceed the window span") {
    std::mt19937_64 rng(23);
    for (unsigned windows : {2u, 3u, 4u}) {
        const unsigned sigma = 16;
        const auto text = random_bytes(rng, sigma, 2000);
        const auto pattern = random_bytes(rng, sigma, 5);
        auto r = run_engine(
            {.kind = EngineKind::MultiWindow, .windows = windows, .instrumented = true}, text,
            pattern, Alphabet(sigma));
        REQUIRE(!r.metrics->shift_histogram.empty());
        const auto max_shift = r.metrics->shift_histogram.rbegin()->first;
        CHECK(max_shift <= std::uint64_t(windows) * pattern.size());
    }
}

TEST_CASE("engine spec validation") {
    const std::vector<Byte> text = {0, 1, 0, 1};
    const std::vector<Byte> pat = {0, 1};
    CHECK_THROWS_AS(run({.kind = EngineKind::Bmh, .unrolled = true}, text, pat, 4), InvalidSpec);
    CHECK_THROWS_AS(run({.kind = EngineKind::MultiWindow, .windows = 0}, text, pat, 4),
                    InvalidSpec);
    CHECK_THROWS_AS(
        run({.kind = EngineKind::MultiWindow, .windows = kMaxWindows + 1}, text, pat, 4),
        InvalidSpec);
    // text containing bytes outside the alphabet is rejected up front
    CHECK_THROWS_AS(run({.kind = EngineKind::Bmh}, {0, 9, 1}, pat, 4), SymbolOutOfAlphabet);
}

TEST_CASE("engine names round-trip") {
    for (const char* token : {"sf", "bmh", "qs", "mw2", "mw3", "mw4u", "mw2u", "mw7"}) {
        CHECK(engine_name(parse_engine_name(token)) == token);
    }
    const EngineSpec bare = parse_engine_name("mw");
    CHECK(bare.kind == EngineKind::MultiWindow);
    CHECK(bare.windows == 2);
    CHECK(!bare.unrolled);
    const EngineSpec u = parse_engine_name("mwu");
    CHECK(u.windows == 2);
    CHECK(u.unrolled);
    CHECK_THROWS_AS(parse_engine_name("nope"), InvalidSpec);
    CHECK_THROWS_AS(parse_engine_name("mw0"), InvalidSpec);
    CHECK_THROWS_AS(parse_engine_name("mw99"), InvalidSpec);
    CHECK_THROWS_AS(parse_engine_name(""), InvalidSpec);
}

TEST_CASE("mismatched table and buffer shapes are rejected") {
    Alphabet a(4);
    Pattern p({0, 1}, a);
    Pattern p3({0, 1, 0}, a);
    const std::vector<Byte> text = {0, 1, 2, 3};
    auto dn3 = build_multi_table_blockfill(p, a, 3);
    auto fallback = build_bmh_table(p, a);
    auto buf2 = make_search_buffer(text, p, 2);
    CHECK_THROWS_AS(multi_window_search(buf2, p, dn3, fallback, nullptr), InvalidSpec);
    auto dn2 = build_multi_table_blockfill(p3, a, 2);
    CHECK_THROWS_AS(multi_window_search(buf2, p, dn2, fallback, nullptr), InvalidSpec);
}
