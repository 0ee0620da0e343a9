#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace warpband {

/// Caller supplied something outside an operation's domain (bad dimension,
/// negative index, invalid parameter, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A solver object was driven out of order, e.g. stepping a band that has not
/// been warmed up with the preceding diagonals.
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed input text (missing header, ragged rows, unparsable numbers).
class FormatError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Well-formed input that violates a domain rule. Carries the 1-based data
/// row that triggered it.
class ValidationError : public InvalidInput {
public:
    ValidationError(const std::string& what, std::size_t row)
        : InvalidInput(what), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// Bad command-line usage (conflicting or missing flags).
class UsageError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace warpband
