#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ehh {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument value (k < 4, eps outside its range, unknown family, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A vertex id outside 0..n-1.
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

/// Input violates an operation's documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// X and Y of a bipartite pair share a vertex.
class OverlapError : public Error {
public:
    using Error::Error;
};

/// Exhaustive oracle asked to run outside the size it is specified for.
class RegimeError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what)
        , line_(line)
    {
    }

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A produced certificate failed re-verification. Carries the pipeline stage.
class VerificationFailure : public Error {
public:
    VerificationFailure(std::string stage, const std::string& what)
        : Error(stage + ": " + what)
        , stage_(std::move(stage))
    {
    }

    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

} // namespace ehh

namespace ehh {

/// No nonempty pair exists on the given input (it is too small).
class NoPairFound : public Error {
public:
    using Error::Error;
};

} // namespace ehh
