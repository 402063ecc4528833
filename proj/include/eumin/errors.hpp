#pragma once

#include <stdexcept>
#include <string>

namespace eumin {

/// Malformed input text (graph or trace files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was invoked on a graph that violates its precondition.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Desk-scale size bound exceeded.
class BoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Trace replay failed at a specific step.
class TraceError : public PreconditionError {
public:
    TraceError(int step, const std::string& what)
        : PreconditionError("step " + std::to_string(step) + ": " + what), step_(step) {}
    int step() const { return step_; }

private:
    int step_;
};

} // namespace eumin
