#include "mwsearch/engines.hpp"

#include <array>
#include <charconv>

namespace mwsearch {

namespace {

// The recorder is a template parameter of every kernel so the
// uninstrumented path compiles the counters away entirely.
struct NullRecorder {
    void iteration() {}
    void text_reads(std::uint64_t) {}
    void table_read() {}
    void verification() {}
    void verify_compare() {}
    void shift(std::uint64_t) {}
};

struct CountingRecorder {
    Metrics* m;
    void iteration() { ++m->iterations; }
    void text_reads(std::uint64_t k) { m->text_reads += k; }
    void table_read() { ++m->table_reads; }
    void verification() { ++m->verifications; }
    void verify_compare() { ++m->verify_symbol_compares; }
    void shift(std::uint64_t v) {
        m->total_shift += v;
        ++m->shift_histogram[v];
    }
};

template <class Rec>
MatchSet sf_kernel(ByteSpan text, const Pattern& pattern, Rec rec) {
    MatchSet out;
    const std::size_t n = text.size();
    const std::size_t m = pattern.length();
    if (m > n) return out;
    const Byte* pat = pattern.data();
    for (std::size_t s = 0; s + m <= n; ++s) {
        rec.iteration();
        rec.verification();
        std::size_t j = 0;
        while (j < m) {
            rec.verify_compare();
            rec.text_reads(2);
            if (text[s + j] != pat[j]) break;
            ++j;
        }
        if (j == m) out.push_back(s);
        rec.shift(1);
    }
    return out;
}

template <class Rec>
MatchSet bmh_kernel(const Byte* data, std::size_t n, const Pattern& pattern,
                    const std::uint32_t* table, Rec rec) {
    MatchSet out;
    const std::size_t m = pattern.length();
    if (m > n) return out;
    const Byte* pat = pattern.data();
    const std::size_t m1 = pattern.last_index();
    const std::size_t last = n - m;

    std::size_t s = 0;
    while (s <= last) {
        rec.iteration();
        rec.verification();
        std::size_t j = m;  // backward scan, last character first
        while (j > 0) {
            rec.verify_compare();
            rec.text_reads(2);
            if (data[s + j - 1] != pat[j - 1]) break;
            --j;
        }
        if (j == 0) out.push_back(s);
        rec.text_reads(1);
        rec.table_read();
        const std::uint32_t shift = table[data[s + m1]];
        rec.shift(shift);
        s += shift;
    }
    return out;
}

template <class Rec>
MatchSet qs_kernel(const Byte* data, std::size_t n, const Pattern& pattern,
                   const std::uint32_t* table, Rec rec) {
    MatchSet out;
    const std::size_t m = pattern.length();
    if (m > n) return out;
    const Byte* pat = pattern.data();
    const std::size_t last = n - m;

    std::size_t s = 0;
    while (s <= last) {
        rec.iteration();
        rec.verification();
        std::size_t j = 0;
        while (j < m) {
            rec.verify_compare();
            rec.text_reads(2);
            if (data[s + j] != pat[j]) break;
            ++j;
        }
        if (j == m) out.push_back(s);
        // Shift on the character just past the window; at s = n-m this
        // reads data[n], the first sentinel byte.
        rec.text_reads(1);
        rec.table_read();
        const std::uint32_t shift = table[data[s + m]];
        rec.shift(shift);
        s += shift;
    }
    return out;
}

// N-window search cycle over the padded buffer. N = 0 selects the
// runtime-N fallback used beyond the specialized window counts.
template <class Entry, unsigned N, bool Unrolled, class Rec>
MatchSet mw_kernel(const Byte* data, std::size_t n, const Pattern& pattern, const Entry* dn,
                   std::size_t sigma, const std::uint32_t* fallback, unsigned runtime_windows,
                   Rec rec) {
    MatchSet out;
    const std::size_t m = pattern.length();
    if (m > n) return out;
    const Byte* pat = pattern.data();
    const std::size_t last = n - m;
    const unsigned windows = N == 0 ? runtime_windows : N;

    // Probe offsets from the window start: k*m - 1 for k = 1..N.
    std::array<std::size_t, kMaxWindows> off;
    for (unsigned k = 0; k < windows; ++k) off[k] = (k + 1) * m - 1;

    auto probe_shift = [&](std::size_t s) {
        std::size_t idx = data[s + off[0]];
        if constexpr (N == 0) {
            for (unsigned k = 1; k < windows; ++k) idx = idx * sigma + data[s + off[k]];
        } else {
            for (unsigned k = 1; k < N; ++k) idx = idx * sigma + data[s + off[k]];
        }
        rec.text_reads(windows);
        rec.table_read();
        return dn[idx];
    };

    auto handle_candidate = [&](std::size_t s) {
        rec.verification();
        std::size_t j = 0;  // forward comparison
        while (j < m) {
            rec.verify_compare();
            rec.text_reads(2);
            if (data[s + j] != pat[j]) break;
            ++j;
        }
        if (j == m && s <= last) out.push_back(s);
        rec.text_reads(1);
        rec.table_read();
        const std::uint32_t d = fallback[data[s + m - 1]];
        rec.shift(d);
        return d;
    };

    std::size_t s = 0;
    if constexpr (Unrolled) {
        // Blind shifts; the text end is tested only on a zero shift. The
        // sentinel pattern copy at offset n guarantees one fires by s = n.
        for (;;) {
            rec.iteration();
            const Entry r = probe_shift(s);
            if (r != 0) {
                rec.shift(r);
                s += r;
                continue;
            }
            if (s > last) break;
            s += handle_candidate(s);
        }
    } else {
        while (s < n) {
            rec.iteration();
            const Entry r = probe_shift(s);
            if (r != 0) {
                rec.shift(r);
                s += r;
            } else {
                s += handle_candidate(s);  // sentinel-region hits filtered inside
            }
        }
    }
    return out;
}

template <class Entry, bool Unrolled, class Rec>
MatchSet mw_select_windows(const Byte* data, std::size_t n, const Pattern& pattern, const Entry* dn,
                           std::size_t sigma, const std::uint32_t* fallback, unsigned windows,
                           Rec rec) {
    switch (windows) {
        case 1: return mw_kernel<Entry, 1, Unrolled>(data, n, pattern, dn, sigma, fallback, 1, rec);
        case 2: return mw_kernel<Entry, 2, Unrolled>(data, n, pattern, dn, sigma, fallback, 2, rec);
        case 3: return mw_kernel<Entry, 3, Unrolled>(data, n, pattern, dn, sigma, fallback, 3, rec);
        case 4: return mw_kernel<Entry, 4, Unrolled>(data, n, pattern, dn, sigma, fallback, 4, rec);
        default:
            return mw_kernel<Entry, 0, Unrolled>(data, n, pattern, dn, sigma, fallback, windows, rec);
    }
}

template <bool Unrolled>
MatchSet mw_search(const SearchBuffer& buffer, const Pattern& pattern, const MultiShiftTable& dn,
                   const ShiftTable1D& fallback, Metrics* metrics) {
    if (buffer.window_count() < dn.window_count())
        throw InvalidSpec("search buffer was padded for fewer windows than the shift table uses");
    if (dn.pattern_length() != pattern.length())
        throw InvalidSpec("shift table was built for a different pattern length");
    const Byte* data = buffer.raw();
    const std::size_t n = buffer.text_length();
    const unsigned windows = dn.window_count();
    const std::size_t sigma = dn.sigma();
    const std::uint32_t* d = fallback.data();

    if (metrics) {
        CountingRecorder rec{metrics};
        if (dn.entry_bits() == 8)
            return mw_select_windows<Byte, Unrolled>(data, n, pattern, dn.data8(), sigma, d,
                                                     windows, rec);
        return mw_select_windows<std::uint16_t, Unrolled>(data, n, pattern, dn.data16(), sigma, d,
                                                          windows, rec);
    }
    NullRecorder rec;
    if (dn.entry_bits() == 8)
        return mw_select_windows<Byte, Unrolled>(data, n, pattern, dn.data8(), sigma, d, windows,
                                                 rec);
    return mw_select_windows<std::uint16_t, Unrolled>(data, n, pattern, dn.data16(), sigma, d,
                                                      windows, rec);
}

}  // namespace

MatchSet sf_search(ByteSpan text, const Pattern& pattern, Metrics* metrics) {
    if (metrics) return sf_kernel(text, pattern, CountingRecorder{metrics});
    return sf_kernel(text, pattern, NullRecorder{});
}

MatchSet bmh_search(const SearchBuffer& buffer, const Pattern& pattern, const ShiftTable1D& table,
                    Metrics* metrics) {
    if (metrics)
        return bmh_kernel(buffer.raw(), buffer.text_length(), pattern, table.data(),
                          CountingRecorder{metrics});
    return bmh_kernel(buffer.raw(), buffer.text_length(), pattern, table.data(), NullRecorder{});
}

MatchSet qs_search(const SearchBuffer& buffer, const Pattern& pattern, const ShiftTable1D& table,
                   Metrics* metrics) {
    if (metrics)
        return qs_kernel(buffer.raw(), buffer.text_length(), pattern, table.data(),
                         CountingRecorder{metrics});
    return qs_kernel(buffer.raw(), buffer.text_length(), pattern, table.data(), NullRecorder{});
}

MatchSet multi_window_search(const SearchBuffer& buffer, const Pattern& pattern,
                             const MultiShiftTable& dn, const ShiftTable1D& fallback,
                             Metrics* metrics) {
    return mw_search<false>(buffer, pattern, dn, fallback, metrics);
}

MatchSet multi_window_search_unrolled(const SearchBuffer& buffer, const Pattern& pattern,
                                      const MultiShiftTable& dn, const ShiftTable1D& fallback,
                                      Metrics* metrics) {
    return mw_search<true>(buffer, pattern, dn, fallback, metrics);
}

EngineTables build_tables(const EngineSpec& spec, const Pattern& pattern, const Alphabet& alphabet,
                          std::uint64_t cap_bytes) {
    EngineTables tables;
    switch (spec.kind) {
        case EngineKind::Sf:
            break;
        case EngineKind::Bmh:
            tables.fallback = build_bmh_table(pattern, alphabet);
            break;
        case EngineKind::Qs:
            tables.quick = build_qs_table(pattern, alphabet);
            break;
        case EngineKind::MultiWindow:
            tables.fallback = build_bmh_table(pattern, alphabet);
            tables.multi = build_multi_table_blockfill(pattern, alphabet, spec.windows, cap_bytes);
            break;
    }
    return tables;
}

MatchSet dispatch_engine(const EngineSpec& spec, const SearchBuffer& buffer, const Pattern& pattern,
                         const EngineTables& tables, Metrics* metrics) {
    switch (spec.kind) {
        case EngineKind::Sf:
            return sf_search(buffer.data().first(buffer.text_length()), pattern, metrics);
        case EngineKind::Bmh:
            return bmh_search(buffer, pattern, *tables.fallback, metrics);
        case EngineKind::Qs:
            return qs_search(buffer, pattern, *tables.quick, metrics);
        case EngineKind::MultiWindow:
            if (spec.unrolled)
                return multi_window_search_unrolled(buffer, pattern, *tables.multi,
                                                    *tables.fallback, metrics);
            return multi_window_search(buffer, pattern, *tables.multi, *tables.fallback, metrics);
    }
    throw InvalidSpec("unknown engine kind");
}

EngineResult run_engine(const EngineSpec& spec, ByteSpan text, ByteSpan pattern_bytes,
                        const Alphabet& alphabet, std::uint64_t cap_bytes) {
    if (spec.unrolled && spec.kind != EngineKind::MultiWindow)
        throw InvalidSpec("unrolled applies to the multi-window engine only");
    if (spec.kind == EngineKind::MultiWindow &&
        (spec.windows < 1 || spec.windows > kMaxWindows))
        throw InvalidSpec("window count must be in [1, " + std::to_string(kMaxWindows) + "]");

    validate_text(text, alphabet);
    Pattern pattern(std::vector<Byte>(pattern_bytes.begin(), pattern_bytes.end()), alphabet);
    EngineTables tables = build_tables(spec, pattern, alphabet, cap_bytes);
    const unsigned buffer_windows = spec.kind == EngineKind::MultiWindow ? spec.windows : 1;
    SearchBuffer buffer = make_search_buffer(text, pattern, buffer_windows);

    EngineResult result;
    if (spec.instrumented) {
        Metrics metrics;
        result.matches = dispatch_engine(spec, buffer, pattern, tables, &metrics);
        result.metrics = std::move(metrics);
    } else {
        result.matches = dispatch_engine(spec, buffer, pattern, tables, nullptr);
    }
    return result;
}

std::string engine_name(const EngineSpec& spec) {
    switch (spec.kind) {
        case EngineKind::Sf: return "sf";
        case EngineKind::Bmh: return "bmh";
        case EngineKind::Qs: return "qs";
        case EngineKind::MultiWindow:
            return "mw" + std::to_string(spec.windows) + (spec.unrolled ? "u" : "");
    }
    return "?";
}

EngineSpec parse_engine_name(const std::string& token) {
    EngineSpec spec;
    if (token == "sf") {
        spec.kind = EngineKind::Sf;
        return spec;
    }
    if (token == "bmh") {
        spec.kind = EngineKind::Bmh;
        return spec;
    }
    if (token == "qs") {
        spec.kind = EngineKind::Qs;
        return spec;
    }
    if (token.rfind("mw", 0) == 0) {
        spec.kind = EngineKind::MultiWindow;
        std::string rest = token.substr(2);
        if (!rest.empty() && rest.back() == 'u') {
            spec.unrolled = true;
            rest.pop_back();
        }
        if (rest.empty()) return spec;  // bare "mw": two windows
        unsigned windows = 0;
        const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), windows);
        if (ec == std::errc() && ptr == rest.data() + rest.size() && windows >= 1 &&
            windows <= kMaxWindows) {
            spec.windows = windows;
            return spec;
        }
    }
    throw InvalidSpec("unknown engine token: " + token);
}

}  // namespace mwsearch
