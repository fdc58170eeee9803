#pragma once

#include <stdexcept>
#include <string>

namespace antiexact {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// -- data/shape errors -------------------------------------------------------

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct FiberMismatch : Error {
    explicit FiberMismatch(const std::string& what) : Error(what) {}
};

struct DegreeError : Error {
    explicit DegreeError(const std::string& what) : Error(what) {}
};

struct NonNilpotentArgument : Error {
    explicit NonNilpotentArgument(const std::string& what) : Error(what) {}
};

// -- solver precondition errors ----------------------------------------------

struct InitialDataNotExact : Error {
    explicit InitialDataNotExact(const std::string& what) : Error(what) {}
};

struct InitialDataNotCoexact : Error {
    explicit InitialDataNotCoexact(const std::string& what) : Error(what) {}
};

struct InitialDataInKernel : Error {
    explicit InitialDataInKernel(const std::string& what) : Error(what) {}
};

struct RHSNotExact : Error {
    explicit RHSNotExact(const std::string& what) : Error(what) {}
};

struct SingularGauge : Error {
    explicit SingularGauge(const std::string& what) : Error(what) {}
};

struct FrameInvalid : Error {
    explicit FrameInvalid(const std::string& what) : Error(what) {}
};

/// The algebraic constraint (and hence the whole equation) has no solution.
struct NoSolutionError : Error {
    explicit NoSolutionError(const std::string& what) : Error(what) {}
};

// -- front-end errors ---------------------------------------------------------

struct ParseError : Error {
    ParseError(int line, int column, const std::string& what)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    int line;
    int column;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A cross-check inside the engine failed; indicates a bug, not bad input.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace antiexact
