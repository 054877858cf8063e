#pragma once

#include <stdexcept>
#include <string>

namespace bisect {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch final : Error {
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

struct DivisionByZero final : Error {
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Raised when an operation has no exact answer in the emulated ordered field.
struct UnsupportedInMode final : Error {
    explicit UnsupportedInMode(const std::string& what) : Error(what) {}
};

struct BadDescriptor final : Error {
    explicit BadDescriptor(const std::string& what) : Error(what) {}
};

struct ParseError final : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct CoincidentPoints final : Error {
    explicit CoincidentPoints(const std::string& what) : Error(what) {}
};

struct IdenticalLines final : Error {
    explicit IdenticalLines(const std::string& what) : Error(what) {}
};

struct SingularMap final : Error {
    explicit SingularMap(const std::string& what) : Error(what) {}
};

struct InvalidQuadrilateral final : Error {
    explicit InvalidQuadrilateral(const std::string& what) : Error(what) {}
};

struct VertexAtInfinity final : Error {
    explicit VertexAtInfinity(const std::string& what) : Error(what) {}
};

struct BothZero final : Error {
    explicit BothZero(const std::string& what) : Error(what) {}
};

struct ZeroForm final : Error {
    explicit ZeroForm(const std::string& what) : Error(what) {}
};

struct DegreeMismatch final : Error {
    explicit DegreeMismatch(const std::string& what) : Error(what) {}
};

struct NotDivisible final : Error {
    explicit NotDivisible(const std::string& what) : Error(what) {}
};

/// An internal algebraic identity failed to hold; indicates a bug, never bad input.
struct IdentityCheckFailed final : Error {
    explicit IdentityCheckFailed(const std::string& what) : Error(what) {}
};

struct NoFiniteDiagonalPoint final : Error {
    explicit NoFiniteDiagonalPoint(const std::string& what) : Error(what) {}
};

struct NotASquare final : Error {
    explicit NotASquare(const std::string& what) : Error(what) {}
};

struct ParallelPair final : Error {
    explicit ParallelPair(const std::string& what) : Error(what) {}
};

struct NotAPair final : Error {
    explicit NotAPair(const std::string& what) : Error(what) {}
};

struct WrongClass final : Error {
    explicit WrongClass(const std::string& what) : Error(what) {}
};

struct SingularPoint final : Error {
    explicit SingularPoint(const std::string& what) : Error(what) {}
};

struct PointNotOnCurve final : Error {
    explicit PointNotOnCurve(const std::string& what) : Error(what) {}
};

struct FieldTooLarge final : Error {
    explicit FieldTooLarge(const std::string& what) : Error(what) {}
};

} // namespace bisect
