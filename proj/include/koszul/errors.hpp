#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad input text; carries 1-based line/column of the offending token.
struct ParseError : Error {
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

/// Structurally invalid request (bad degree, mismatched session, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Mixing scalars of different characteristic.
struct FieldMismatchError : Error {
    using Error::Error;
};

/// A product or differential left the truncated degree range.
struct TruncationError : Error {
    using Error::Error;
};

/// override_basis rejected the proposed generators.
struct SpanMismatchError : Error {
    using Error::Error;
};

struct NotCocycleError : Error {
    using Error::Error;
};

/// An identity guaranteed for Koszul input failed to hold.
struct KoszulViolationError : Error {
    using Error::Error;
};

/// The constructed resolution is not exact at (n, d).
struct ExactnessError : Error {
    ExactnessError(int n, int d)
        : Error("resolution not exact at homological degree " + std::to_string(n) +
                ", internal degree " + std::to_string(d)),
          n(n),
          d(d) {}
    int n;
    int d;
};

/// A total-dimension query on an algebra not known to be finite dimensional.
struct WeightRequiredError : Error {
    using Error::Error;
};

}  // namespace koszul
