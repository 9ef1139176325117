#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mwsearch {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument to a constructor or builder (m = 0, sigma out of range, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A text or pattern byte is >= sigma and cannot index the shift tables.
class SymbolOutOfAlphabet : public Error {
public:
    SymbolOutOfAlphabet(std::size_t index, unsigned value, unsigned sigma)
        : Error("symbol " + std::to_string(value) + " at offset " + std::to_string(index) +
                " is outside alphabet of size " + std::to_string(sigma)),
          index_(index),
          value_(value) {}

    std::size_t index() const { return index_; }
    unsigned value() const { return value_; }

private:
    std::size_t index_;
    unsigned value_;
};

/// sigma^N entries would exceed the configured table memory cap.
class TableTooLarge : public Error {
public:
    TableTooLarge(std::uint64_t required_bytes, std::uint64_t cap)
        : Error("shift table requires " + std::to_string(required_bytes) +
                " bytes, cap is " + std::to_string(cap)),
          required_bytes_(required_bytes),
          cap_(cap) {}

    std::uint64_t required_bytes() const { return required_bytes_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t required_bytes_;
    std::uint64_t cap_;
};

/// Inconsistent engine selection (e.g. unrolled requested for a non multi-window engine).
class InvalidSpec : public Error {
public:
    using Error::Error;
};

/// Bad benchmark configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace mwsearch
