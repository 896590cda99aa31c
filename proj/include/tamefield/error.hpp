#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tamefield {

enum class ErrorKind {
    DimensionMismatch,
    BoundExceeded,
    NotPrime,
    UnsupportedField,
    WrongRing,
    PrecisionLoss,
    PrecisionExhausted,
    NonUnitValue,
    DivisionByZero,
    UnsupportedBackend,
    DependentValues,
    PreconditionFailed,
    NotSquarefree,
    UnsupportedShape,
    StepBoundExceeded,
    TailTooShort,
    InstanceIllFormed,
    NotClosed,
    DepthBoundExceeded,
    SyntaxError,
    SemanticError,
    InvalidElement,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse errors also remember where in the input they happened (1-based).
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, const std::string& message, int line, int column)
        : Error(kind, message + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace tamefield
