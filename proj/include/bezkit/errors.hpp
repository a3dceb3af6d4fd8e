#pragma once

#include <stdexcept>
#include <string>

namespace bez {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands built over different RingContexts.
struct RingMismatch : Error {
    using Error::Error;
};

// exact_quotient found a nonzero remainder.
struct InexactDivision : Error {
    using Error::Error;
};

struct NonSquareMatrix : Error {
    using Error::Error;
};

// #polynomials != #variables in a system file.
struct ArityMismatch : Error {
    using Error::Error;
};

// The ideal (f - q) is neither zero-dimensional nor the unit ideal.
struct NotFiniteFibers : Error {
    using Error::Error;
};

// The quotient ring is the zero ring and has no monomial basis.
struct UnitIdealError : Error {
    using Error::Error;
};

struct SearchSpaceTooLarge : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

struct UnknownVariable : ParseError {
    std::string name;
    UnknownVariable(const std::string& name_, int line_, int col_)
        : ParseError("unknown variable '" + name_ + "'", line_, col_),
          name(name_) {}
};

}  // namespace bez
