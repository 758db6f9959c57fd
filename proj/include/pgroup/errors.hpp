#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgroup {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation would have to enumerate more elements than the configured budget allows.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::size_t required, std::size_t budget)
        : Error(what + ": requires " + std::to_string(required) + " elements, budget is " +
                std::to_string(budget)),
          required_(required), budget_(budget) {}

    std::size_t required() const { return required_; }
    std::size_t budget() const { return budget_; }

private:
    std::size_t required_;
    std::size_t budget_;
};

/// The input group does not belong to the class handled here
/// (class 2, derived subgroup of order p, odd p).
class OutOfClass : public Error {
public:
    using Error::Error;
};

/// A catalog parameter tuple violates the constraints of its type.
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// Malformed catalog text. `offset()` is a byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error("parse error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// An internal identity that must hold for every group in the class failed.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

}  // namespace pgroup
