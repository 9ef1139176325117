#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "mwsearch/core.hpp"

namespace mwsearch {

/// Default cap on multi-dimensional table memory. sigma^N grows fast;
/// the cap turns runaway configurations into a clean TableTooLarge.
inline constexpr std::uint64_t kDefaultTableCapBytes = 64ull << 20;

enum class ShiftKind {
    BmhFallback,  // rightmost occurrence over P[0..m-2]; entries in [1, m]
    QuickSearch,  // rightmost occurrence over P[0..m-1]; entries in [1, m+1]
};

/// One-dimensional bad-character table, sigma entries.
class ShiftTable1D {
public:
    ShiftTable1D(ShiftKind kind, std::vector<std::uint32_t> entries)
        : kind_(kind), entries_(std::move(entries)) {}

    ShiftKind kind() const { return kind_; }
    std::uint32_t operator[](Byte c) const { return entries_[c]; }
    std::size_t size() const { return entries_.size(); }
    std::span<const std::uint32_t> entries() const { return entries_; }
    const std::uint32_t* data() const { return entries_.data(); }

private:
    ShiftKind kind_;
    std::vector<std::uint32_t> entries_;
};

/// Classic Horspool fallback table: entries[c] = m-1-q where q is the
/// rightmost position of c in P[0..m-2], or m when c does not occur there.
ShiftTable1D build_bmh_table(const Pattern& pattern, const Alphabet& alphabet);

/// Quick-search table: entries[c] = m-q over the full pattern, or m+1
/// when absent.
ShiftTable1D build_qs_table(const Pattern& pattern, const Alphabet& alphabet);

class MultiShiftTable;

/// Memory footprint of an N-window table: sigma^N entries, one byte each
/// while N*m fits in 8 bits, two bytes otherwise. Saturates on overflow.
std::uint64_t table_bytes(unsigned sigma, unsigned n_windows, std::size_t m);

MultiShiftTable build_multi_table_naive(const Pattern& pattern, const Alphabet& alphabet,
                                        unsigned n_windows,
                                        std::uint64_t cap_bytes = kDefaultTableCapBytes,
                                        std::uint64_t* touched_entries = nullptr);

MultiShiftTable build_multi_table_blockfill(const Pattern& pattern, const Alphabet& alphabet,
                                            unsigned n_windows,
                                            std::uint64_t cap_bytes = kDefaultTableCapBytes);

/// Flat sigma^N-entry shift table indexed by the last characters of N
/// adjacent windows. Entry semantics: with probes (i_1..i_N) read at
/// window offsets k*m-1, the stored shift is k*.m - q - 1 where k* is the
/// nearest window whose probe occurs in the pattern and q that symbol's
/// rightmost position; N*m when no probe occurs. A zero entry means the
/// first window may match here (i_1 equals the pattern's last symbol).
class MultiShiftTable {
public:
    unsigned window_count() const { return n_windows_; }
    unsigned sigma() const { return sigma_; }
    std::size_t pattern_length() const { return pattern_len_; }
    unsigned entry_bits() const { return entry_bits_; }
    std::size_t entry_count() const { return entry_count_; }

    /// strides[k-1] = sigma^(N-k); flatten(i_1..i_N) = sum i_k * strides[k-1].
    std::span<const std::size_t> strides() const { return strides_; }

    std::size_t flatten(ByteSpan probes) const {
        std::size_t idx = 0;
        for (unsigned k = 0; k < n_windows_; ++k) idx += probes[k] * strides_[k];
        return idx;
    }

    std::uint32_t at(std::size_t flat) const {
        return entry_bits_ == 8 ? entries8_[flat] : entries16_[flat];
    }

    std::uint32_t lookup(ByteSpan probes) const { return at(flatten(probes)); }

    const Byte* data8() const { return entry_bits_ == 8 ? entries8_.data() : nullptr; }
    const std::uint16_t* data16() const { return entry_bits_ == 16 ? entries16_.data() : nullptr; }

    bool operator==(const MultiShiftTable& other) const = default;

    /// Debug dump: header of four little-endian u32 (sigma, N, m,
    /// entry_bits) followed by the flat entry array, little-endian.
    void dump(std::ostream& out) const;

private:
    MultiShiftTable(unsigned n_windows, unsigned sigma, std::size_t pattern_len);

    friend MultiShiftTable build_multi_table_naive(const Pattern&, const Alphabet&, unsigned,
                                                   std::uint64_t, std::uint64_t*);
    friend MultiShiftTable build_multi_table_blockfill(const Pattern&, const Alphabet&, unsigned,
                                                       std::uint64_t);

    unsigned n_windows_;
    unsigned sigma_;
    std::size_t pattern_len_;
    unsigned entry_bits_;
    std::size_t entry_count_;
    std::vector<std::size_t> strides_;
    std::vector<Byte> entries8_;
    std::vector<std::uint16_t> entries16_;
};

/// Pure read of entries[flatten(probes)]; probes must hold N symbols < sigma.
inline std::uint32_t lookup_shift(const MultiShiftTable& table, ByteSpan probes) {
    return table.lookup(probes);
}

}  // namespace mwsearch
