#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mwsearch/errors.hpp"

namespace mwsearch {

/// Hard bound on the number of adjacent windows probed per iteration.
/// The table memory cap kicks in long before this for sigma >= 4.
inline constexpr unsigned kMaxWindows = 32;

using Byte = std::uint8_t;
using ByteSpan = std::span<const Byte>;

/// Sorted 0-based start offsets of pattern occurrences.
using MatchSet = std::vector<std::size_t>;

/// Symbols are byte values in [0, sigma).
class Alphabet {
public:
    explicit Alphabet(unsigned sigma) : sigma_(sigma) {
        if (sigma < 2 || sigma > 256)
            throw InvalidArgument("alphabet size must be in [2, 256], got " + std::to_string(sigma));
    }

    unsigned sigma() const { return sigma_; }
    bool contains(Byte b) const { return b < sigma_; }

private:
    unsigned sigma_;
};

/// Throws SymbolOutOfAlphabet at the first byte >= sigma. Direct table
/// indexing requires every symbol to be a valid index.
void validate_text(ByteSpan text, const Alphabet& alphabet);

/// A validated pattern with the lengths the search loops need
/// precomputed: m1 = m-1 and k*m for k = 1..kMaxWindows.
class Pattern {
public:
    Pattern(std::vector<Byte> symbols, const Alphabet& alphabet);

    std::size_t length() const { return symbols_.size(); }          // m
    std::size_t last_index() const { return symbols_.size() - 1; }  // m1

    /// k*m, 1 <= k <= kMaxWindows.
    std::size_t window_span(unsigned k) const { return km_[k - 1]; }

    /// Number of distinct byte values in the pattern.
    std::size_t distinct_count() const { return distinct_count_; }

    unsigned sigma() const { return sigma_; }
    ByteSpan symbols() const { return symbols_; }
    const Byte* data() const { return symbols_.data(); }
    Byte last_symbol() const { return symbols_.back(); }
    Byte operator[](std::size_t i) const { return symbols_[i]; }

private:
    std::vector<Byte> symbols_;
    std::vector<std::size_t> km_;
    std::size_t distinct_count_;
    unsigned sigma_;
};

/// Text plus N copies of the pattern appended after it. The sentinel
/// copies make every probe read data[s + k*m - 1] for s <= n in bounds,
/// and guarantee the search loops hit a candidate at s = n at the latest.
class SearchBuffer {
public:
    SearchBuffer(std::vector<Byte> data, std::size_t text_len, unsigned n_windows)
        : data_(std::move(data)), text_len_(text_len), n_windows_(n_windows) {}

    ByteSpan data() const { return data_; }
    const Byte* raw() const { return data_.data(); }
    std::size_t size() const { return data_.size(); }

    std::size_t text_length() const { return text_len_; }                // n
    std::size_t pad_length() const { return data_.size() - text_len_; }  // N*m
    unsigned window_count() const { return n_windows_; }

private:
    std::vector<Byte> data_;
    std::size_t text_len_;
    unsigned n_windows_;
};

/// Appends n_windows copies of the pattern to the text. Inputs must have
/// been validated against the same alphabet.
SearchBuffer make_search_buffer(ByteSpan text, const Pattern& pattern, unsigned n_windows);

/// Left-to-right comparison of buffer.data[s .. s+m) against the pattern.
/// Requires s + m <= buffer.size().
bool verify_match(const SearchBuffer& buffer, const Pattern& pattern, std::size_t s);

}  // namespace mwsearch
