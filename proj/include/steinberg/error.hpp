#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace steinberg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands belong to different families or ranks.
class FamilyMismatch : public Error {
public:
    using Error::Error;
};

/// A value violates the invariants of its type (bad permutation, overlapping blocks, ...).
class InvalidValue : public Error {
public:
    using Error::Error;
};

/// An enumeration would produce more items than the configured budget allows.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::size_t budget)
        : Error(what + " exceeds the enumeration budget of " + std::to_string(budget)),
          budget_(budget) {}

    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t budget_;
};

/// A compact sign vector that does not describe any affine face.
class NonRealizable : public Error {
public:
    using Error::Error;
};

/// Malformed wire input (bad JSON, wrong shape).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace steinberg
