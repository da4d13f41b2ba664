#pragma once

#include <stdexcept>
#include <string>

namespace tropeig {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

// Kleene star diverges: some directed cycle has positive total weight.
struct PositiveCycleError : Error {
    using Error::Error;
};

struct DimensionTooLargeError : Error {
    using Error::Error;
};

struct DimensionTooSmallError : Error {
    using Error::Error;
};

struct InvalidDimensionError : Error {
    using Error::Error;
};

// The eigenspace is positive-dimensional (or the type is degenerate); callers
// wanting a single representative should inspect the eigenpolytope instead.
struct NonUniqueEigenvectorError : Error {
    using Error::Error;
};

struct NotAKiteError : Error {
    using Error::Error;
};

struct NotSkewError : Error {
    NotSkewError(const std::string& msg, int i, int j) : Error(msg), row(i), col(j) {}
    int row;
    int col;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace tropeig
