#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace udr {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Base class for every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration (signal spec, ADC config, CLI-level settings).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Argument outside an operation's stated domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Operation not defined for the given input kind.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Unrecognized container, magic, version, or encoding.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Payload length disagrees with the header (truncated or trailing bytes).
class LengthError : public Error {
public:
    using Error::Error;
};

/// Invalid record content; carries the 0-based record index.
class CorruptionError : public Error {
public:
    CorruptionError(const std::string& msg, std::size_t record_index)
        : Error(msg + " (record " + std::to_string(record_index) + ")"),
          record_index_(record_index) {}
    std::size_t record_index() const { return record_index_; }

private:
    std::size_t record_index_;
};

/// Modulo counter left [0, 2^counter_bits); carries the sample index when known.
class SaturationError : public Error {
public:
    explicit SaturationError(const std::string& msg, std::size_t sample_index = npos)
        : Error(sample_index == npos ? msg
                                     : msg + " (sample " + std::to_string(sample_index) + ")"),
          sample_index_(sample_index) {}
    std::size_t sample_index() const { return sample_index_; }

private:
    std::size_t sample_index_;
};

/// Fold iteration exhausted its cycle budget.
class NonConvergenceError : public Error {
public:
    using Error::Error;
};

} // namespace udr
