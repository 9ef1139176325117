#pragma once

#include <optional>

#include "mwsearch/core.hpp"
#include "mwsearch/metrics.hpp"
#include "mwsearch/shift_tables.hpp"

namespace mwsearch {

enum class EngineKind { Sf, Bmh, Qs, MultiWindow };

struct EngineSpec {
    EngineKind kind = EngineKind::MultiWindow;
    unsigned windows = 2;     // multi-window only
    bool unrolled = false;    // multi-window only
    bool instrumented = false;
};

/// Straightforward nested-loop search over the raw text. Slow and
/// obviously correct; the ground truth every other engine is tested
/// against.
MatchSet sf_search(ByteSpan text, const Pattern& pattern, Metrics* metrics = nullptr);

/// Boyer-Moore-Horspool: backward window comparison, then advance by the
/// fallback table entry for the window's last character.
MatchSet bmh_search(const SearchBuffer& buffer, const Pattern& pattern, const ShiftTable1D& table,
                    Metrics* metrics = nullptr);

/// Quick search: forward window comparison, then advance by the table
/// entry for the character just past the window (the sentinel padding
/// keeps that read in bounds at the last alignment).
MatchSet qs_search(const SearchBuffer& buffer, const Pattern& pattern, const ShiftTable1D& table,
                   Metrics* metrics = nullptr);

/// N adjacent windows per iteration: one multi-table lookup on the last
/// characters of windows s+m-1, s+2m-1, ..., s+N*m-1 yields the shift;
/// a zero entry marks a candidate, verified and then advanced by the
/// 1-D fallback table.
MatchSet multi_window_search(const SearchBuffer& buffer, const Pattern& pattern,
                             const MultiShiftTable& dn, const ShiftTable1D& fallback,
                             Metrics* metrics = nullptr);

/// Same match set as multi_window_search with a different loop shape:
/// blind shifts with no end-of-text test, checking the position against
/// the text end only when a zero shift fires. The appended pattern
/// copies guarantee such a candidate at s = n at the latest.
MatchSet multi_window_search_unrolled(const SearchBuffer& buffer, const Pattern& pattern,
                                      const MultiShiftTable& dn, const ShiftTable1D& fallback,
                                      Metrics* metrics = nullptr);

/// Tables an engine needs, built once per pattern.
struct EngineTables {
    std::optional<ShiftTable1D> fallback;   // bmh + multi-window
    std::optional<ShiftTable1D> quick;      // qs
    std::optional<MultiShiftTable> multi;   // multi-window
};

EngineTables build_tables(const EngineSpec& spec, const Pattern& pattern, const Alphabet& alphabet,
                          std::uint64_t cap_bytes = kDefaultTableCapBytes);

/// Dispatches a prepared search. Tables and buffer must fit the chosen engine.
MatchSet dispatch_engine(const EngineSpec& spec, const SearchBuffer& buffer, const Pattern& pattern,
                         const EngineTables& tables, Metrics* metrics = nullptr);

/// Instrumented run of a prepared engine. The match set is identical to
/// the uninstrumented path. Requires spec.instrumented.
std::pair<MatchSet, Metrics> collect_metrics(const EngineSpec& spec, const SearchBuffer& buffer,
                                             const Pattern& pattern, const EngineTables& tables);

struct EngineResult {
    MatchSet matches;
    std::optional<Metrics> metrics;
};

/// Validates inputs, builds pattern/tables/buffer for the chosen engine and
/// runs it. Throws SymbolOutOfAlphabet, TableTooLarge or InvalidSpec.
EngineResult run_engine(const EngineSpec& spec, ByteSpan text, ByteSpan pattern_bytes,
                        const Alphabet& alphabet,
                        std::uint64_t cap_bytes = kDefaultTableCapBytes);

/// Short engine token: "sf", "bmh", "qs", "mw<N>", "mw<N>u".
std::string engine_name(const EngineSpec& spec);

/// Inverse of engine_name. Throws InvalidSpec on unknown tokens.
EngineSpec parse_engine_name(const std::string& token);

}  // namespace mwsearch
