#pragma once

#include <stdexcept>
#include <string>

namespace nss {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two fields passed to a binary operation live on different grids.
struct GridMismatch : Error {
    using Error::Error;
};

// inverse_transform received coefficients whose imaginary residue exceeds
// the Hermitian-symmetry tolerance.
struct NonHermitianInput : Error {
    using Error::Error;
};

// Scalar argument outside the mathematical domain (x < 0, tau <= 0, ...).
struct DomainError : Error {
    using Error::Error;
};

// A multistep update was requested before any history was accumulated.
struct MissingHistory : Error {
    using Error::Error;
};

// NaN or Inf detected in the solution; carries the failing step index.
struct NonFinite : Error {
    long step_index;
    NonFinite(const std::string& what, long step) : Error(what), step_index(step) {}
};

struct EmptyWindow : Error {
    using Error::Error;
};

struct NonPositiveTime : Error {
    using Error::Error;
};

struct NonPositiveValue : Error {
    using Error::Error;
};

// Relative-error denominator is numerically zero.
struct DegenerateNorm : Error {
    using Error::Error;
};

// Config file could not be tokenized; carries the 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(const std::string& what, int line_no) : Error(what), line(line_no) {}
};

// Config parsed but a field failed validation; carries the field name.
struct ValidationError : Error {
    std::string field;
    ValidationError(const std::string& what, std::string field_name)
        : Error(what), field(std::move(field_name)) {}
};

struct ExpressionError : Error {
    using Error::Error;
};

struct SnapshotFormatError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace nss
