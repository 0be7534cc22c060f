#pragma once

#include <stdexcept>
#include <string>

namespace z4lat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// z4 codes
struct NonOrthogonalUpper : Error {
    NonOrthogonalUpper(int i, int j, int dot)
        : Error("upper rows " + std::to_string(i) + "," + std::to_string(j) +
                " have inner product " + std::to_string(dot) + " (mod 4)"),
          row_i(i), row_j(j), inner(dot) {}
    int row_i, row_j, inner;
};
struct ShapeError : Error {
    using Error::Error;
};
struct NotSelfDual : Error {
    NotSelfDual() : Error("code is not self-dual") {}
    using Error::Error;
};

// binary codes
struct BudgetExceeded : Error {
    using Error::Error;
};

// weights and bounds
struct TooLarge : Error {
    using Error::Error;
};
struct OutOfRange : Error {
    using Error::Error;
};
struct Undetermined : Error {
    using Error::Error;
};

// lattices
struct NotUnimodular : Error {
    using Error::Error;
};

// q-series
struct InsufficientOrder : Error {
    using Error::Error;
};
struct NonIntegralAlpha : Error {
    using Error::Error;
};

// dataset and parsing
struct ParseError : Error {
    ParseError(int line_, int col_, const std::string& what_)
        : Error("parse error at line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ": " + what_),
          line(line_), col(col_) {}
    int line, col;
};

}  // namespace z4lat
