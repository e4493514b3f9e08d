#pragma once

#include <stdexcept>
#include <string>

namespace jamwatch {

// Precondition violations throw std::invalid_argument directly.

// Dataset and checkpoint I/O failures. Distinct codes so callers can react
// to corruption differently from version drift.
class DatasetError : public std::runtime_error {
public:
    enum class Code {
        NotFound,
        Malformed,
        VersionMismatch,
        Truncated,
        ChecksumMismatch,
    };

    DatasetError(Code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Code code() const { return code_; }

private:
    Code code_;
};

// Non-finite values where the numerics contract forbids them (NaN loss,
// exploding gradients). The CLI maps this to its numeric-failure exit code.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace jamwatch
