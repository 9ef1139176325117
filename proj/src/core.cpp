#include "mwsearch/core.hpp"

#include <array>

namespace mwsearch {

void validate_text(ByteSpan text, const Alphabet& alphabet) {
    const unsigned sigma = alphabet.sigma();
    if (sigma == 256) return;  // every byte is a valid symbol
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] >= sigma) throw SymbolOutOfAlphabet(i, text[i], sigma);
    }
}

Pattern::Pattern(std::vector<Byte> symbols, const Alphabet& alphabet)
    : symbols_(std::move(symbols)), sigma_(alphabet.sigma()) {
    if (symbols_.empty()) throw InvalidArgument("pattern must have at least one symbol");
    validate_text(symbols_, alphabet);

    km_.reserve(kMaxWindows);
    for (unsigned k = 1; k <= kMaxWindows; ++k) km_.push_back(k * symbols_.size());

    std::array<bool, 256> seen{};
    distinct_count_ = 0;
    for (Byte b : symbols_) {
        if (!seen[b]) {
            seen[b] = true;
            ++distinct_count_;
        }
    }
}

SearchBuffer make_search_buffer(ByteSpan text, const Pattern& pattern, unsigned n_windows) {
    if (n_windows < 1 || n_windows > kMaxWindows)
        throw InvalidArgument("window count must be in [1, " + std::to_string(kMaxWindows) + "]");

    std::vector<Byte> data;
    data.reserve(text.size() + pattern.window_span(n_windows));
    data.insert(data.end(), text.begin(), text.end());
    for (unsigned k = 0; k < n_windows; ++k)
        data.insert(data.end(), pattern.symbols().begin(), pattern.symbols().end());
    return SearchBuffer(std::move(data), text.size(), n_windows);
}

bool verify_match(const SearchBuffer& buffer, const Pattern& pattern, std::size_t s) {
    const Byte* data = buffer.raw();
    const Byte* pat = pattern.data();
    const std::size_t m = pattern.length();
    for (std::size_t j = 0; j < m; ++j) {
        if (data[s + j] != pat[j]) return false;
    }
    return true;
}

}  // namespace mwsearch
