#pragma once

#include <stdexcept>
#include <string>

namespace posray {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text: bad JSON, missing/unknown/ill-typed fields.
struct SyntaxError : Error {
    using Error::Error;
};

// Structurally broken diagram: wrong V count, dot outside the shape, duplicates.
struct ShapeError : Error {
    using Error::Error;
};

// A box violating the Le-condition; carries its (row, col).
struct LeViolationError : Error {
    int row;
    int col;
    LeViolationError(int row_, int col_, const std::string& msg)
        : Error(msg), row(row_), col(col_) {}
};

// Caller broke an operation's stated precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// An internal invariant failed; indicates a bug or corrupted state, not bad user input.
struct InvariantError : Error {
    using Error::Error;
};

// A colored configuration whose tokens do not decompose into disjoint paths.
struct MalformedConfigError : Error {
    using Error::Error;
};

// An exhaustive check was asked to run beyond its hard size guard.
struct SizeGuardError : Error {
    using Error::Error;
};

}  // namespace posray
