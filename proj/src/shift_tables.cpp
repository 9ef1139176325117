#include "mwsearch/shift_tables.hpp"

#include <array>
#include <cstring>
#include <limits>
#include <ostream>

namespace mwsearch {

namespace {

// Rightmost position of each symbol in P[0..last_inclusive], -1 if absent.
std::array<int, 256> rightmost_positions(const Pattern& pattern, std::size_t last_inclusive) {
    std::array<int, 256> q;
    q.fill(-1);
    for (std::size_t i = 0; i <= last_inclusive; ++i) q[pattern[i]] = static_cast<int>(i);
    return q;
}

void check_cap(unsigned sigma, unsigned n_windows, std::size_t m, std::uint64_t cap_bytes) {
    if (n_windows < 1 || n_windows > kMaxWindows)
        throw InvalidArgument("window count must be in [1, " + std::to_string(kMaxWindows) + "]");
    const std::uint64_t max_shift = static_cast<std::uint64_t>(n_windows) * m;
    if (max_shift > std::numeric_limits<std::uint16_t>::max())
        throw InvalidArgument("N*m = " + std::to_string(max_shift) +
                              " does not fit the 16-bit table entries");
    const std::uint64_t bytes = table_bytes(sigma, n_windows, m);
    if (bytes > cap_bytes) throw TableTooLarge(bytes, cap_bytes);
}

template <typename Entry>
void fill_naive(Entry* entries, const Pattern& pattern, unsigned sigma, unsigned n_windows,
                std::uint64_t* touched) {
    const std::size_t m = pattern.length();
    const auto q = rightmost_positions(pattern, m - 1);

    std::size_t entry_count = 1;
    for (unsigned k = 0; k < n_windows; ++k) entry_count *= sigma;

    // Step 1: every entry gets the maximum shift N*m.
    const Entry max_shift = static_cast<Entry>(n_windows * m);
    std::fill(entries, entries + entry_count, max_shift);
    std::uint64_t writes = entry_count;

    // Steps 2..N+1: dimension k from N down to 1, so that nearer-window
    // constraints overwrite farther ones.
    for (unsigned k = n_windows; k >= 1; --k) {
        std::size_t inner = 1;  // sigma^(N-k), the stride of dimension k
        for (unsigned i = 0; i < n_windows - k; ++i) inner *= sigma;
        std::size_t outer = entry_count / (inner * sigma);  // sigma^(k-1)

        for (unsigned c = 0; c < sigma; ++c) {
            if (q[c] < 0) continue;
            const Entry value = static_cast<Entry>(k * m - q[c] - 1);
            for (std::size_t o = 0; o < outer; ++o) {
                Entry* block = entries + o * inner * sigma + c * inner;
                std::fill(block, block + inner, value);
            }
            writes += outer * inner;
        }
    }
    if (touched) *touched = writes;
}

// The table factors into a handful of distinct innermost rows: a constant
// row wherever some outer probe occurs in the pattern, and one shared
// "no outer hit" row otherwise. Build that base row once and replicate
// whole blocks by memcpy instead of revisiting every entry.
template <typename Entry>
void fill_blockfill(Entry* entries, const Pattern& pattern, unsigned sigma, unsigned n_windows) {
    const std::size_t m = pattern.length();
    const auto q = rightmost_positions(pattern, m - 1);

    std::vector<Entry> prev(sigma);
    for (unsigned c = 0; c < sigma; ++c) {
        prev[c] = static_cast<Entry>(q[c] >= 0 ? n_windows * m - q[c] - 1 : n_windows * m);
    }

    for (unsigned k = n_windows - 1; k >= 1; --k) {
        std::vector<Entry> cur(prev.size() * sigma);
        for (unsigned c = 0; c < sigma; ++c) {
            Entry* block = cur.data() + c * prev.size();
            if (q[c] >= 0) {
                std::fill(block, block + prev.size(), static_cast<Entry>(k * m - q[c] - 1));
            } else {
                std::memcpy(block, prev.data(), prev.size() * sizeof(Entry));
            }
        }
        prev = std::move(cur);
    }
    std::memcpy(entries, prev.data(), prev.size() * sizeof(Entry));
}

void write_u32_le(std::ostream& out, std::uint32_t v) {
    const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                           static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
    out.write(bytes, 4);
}

}  // namespace

ShiftTable1D build_bmh_table(const Pattern& pattern, const Alphabet& alphabet) {
    const std::size_t m = pattern.length();
    std::vector<std::uint32_t> entries(alphabet.sigma(), static_cast<std::uint32_t>(m));
    // Last position excluded: the minimum shift stays 1.
    for (std::size_t i = 0; i + 1 < m; ++i)
        entries[pattern[i]] = static_cast<std::uint32_t>(m - 1 - i);
    return ShiftTable1D(ShiftKind::BmhFallback, std::move(entries));
}

ShiftTable1D build_qs_table(const Pattern& pattern, const Alphabet& alphabet) {
    const std::size_t m = pattern.length();
    std::vector<std::uint32_t> entries(alphabet.sigma(), static_cast<std::uint32_t>(m + 1));
    for (std::size_t i = 0; i < m; ++i)
        entries[pattern[i]] = static_cast<std::uint32_t>(m - i);
    return ShiftTable1D(ShiftKind::QuickSearch, std::move(entries));
}

std::uint64_t table_bytes(unsigned sigma, unsigned n_windows, std::size_t m) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t count = 1;
    for (unsigned k = 0; k < n_windows; ++k) {
        if (count > kMax / sigma) return kMax;
        count *= sigma;
    }
    const std::uint64_t entry_size = (static_cast<std::uint64_t>(n_windows) * m <= 255) ? 1 : 2;
    if (count > kMax / entry_size) return kMax;
    return count * entry_size;
}

MultiShiftTable::MultiShiftTable(unsigned n_windows, unsigned sigma, std::size_t pattern_len)
    : n_windows_(n_windows), sigma_(sigma), pattern_len_(pattern_len) {
    entry_bits_ = (static_cast<std::uint64_t>(n_windows) * pattern_len <= 255) ? 8 : 16;
    entry_count_ = 1;
    for (unsigned k = 0; k < n_windows; ++k) entry_count_ *= sigma;
    strides_.resize(n_windows);
    std::size_t stride = 1;
    for (unsigned k = n_windows; k >= 1; --k) {
        strides_[k - 1] = stride;
        stride *= sigma;
    }
    if (entry_bits_ == 8)
        entries8_.resize(entry_count_);
    else
        entries16_.resize(entry_count_);
}

MultiShiftTable build_multi_table_naive(const Pattern& pattern, const Alphabet& alphabet,
                                        unsigned n_windows, std::uint64_t cap_bytes,
                                        std::uint64_t* touched_entries) {
    check_cap(alphabet.sigma(), n_windows, pattern.length(), cap_bytes);
    MultiShiftTable table(n_windows, alphabet.sigma(), pattern.length());
    if (table.entry_bits_ == 8)
        fill_naive(table.entries8_.data(), pattern, alphabet.sigma(), n_windows, touched_entries);
    else
        fill_naive(table.entries16_.data(), pattern, alphabet.sigma(), n_windows, touched_entries);
    return table;
}

MultiShiftTable build_multi_table_blockfill(const Pattern& pattern, const Alphabet& alphabet,
                                            unsigned n_windows, std::uint64_t cap_bytes) {
    check_cap(alphabet.sigma(), n_windows, pattern.length(), cap_bytes);
    MultiShiftTable table(n_windows, alphabet.sigma(), pattern.length());
    if (table.entry_bits_ == 8)
        fill_blockfill(table.entries8_.data(), pattern, alphabet.sigma(), n_windows);
    else
        fill_blockfill(table.entries16_.data(), pattern, alphabet.sigma(), n_windows);
    return table;
}

void MultiShiftTable::dump(std::ostream& out) const {
    write_u32_le(out, sigma_);
    write_u32_le(out, n_windows_);
    write_u32_le(out, static_cast<std::uint32_t>(pattern_len_));
    write_u32_le(out, entry_bits_);
    if (entry_bits_ == 8) {
        out.write(reinterpret_cast<const char*>(entries8_.data()),
                  static_cast<std::streamsize>(entries8_.size()));
    } else {
        for (std::uint16_t v : entries16_) {
            const char bytes[2] = {static_cast<char>(v & 0xff), static_cast<char>(v >> 8)};
            out.write(bytes, 2);
        }
    }
}

}  // namespace mwsearch
