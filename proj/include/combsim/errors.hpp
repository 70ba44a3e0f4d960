#pragma once

#include <stdexcept>
#include <string>

namespace combsim {

// Every failure the library reports, tagged so callers (notably the CLI)
// can map kinds to exit codes without parsing messages.
enum class ErrorKind {
    ParseError,
    NonSquare,
    NegativeDistance,
    NonZeroDiagonal,
    Asymmetric,
    TriangleViolation,
    EmptySpace,
    ValueNotInRange,
    EmptySubset,
    UnknownLabel,
    DuplicateLabel,
    InvalidPartition,
    NotAnEquivalence,
    GroundMismatch,
    WrongBlockCount,
    SizeMismatch,
    NotABijection,
    TooLarge,
    PointSetMismatch,
    BadSize,
    BadSample,
    ClosureViolation,
    InternalCheck,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace combsim
