#pragma once

#include <stdexcept>
#include <string>

namespace fraclimit {

// Common base for all domain failures so callers (and the CLI) can map the
// whole family to one exit path while still printing the precise kind.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Gamma evaluated at a non-positive integer.
class PoleError : public DomainError {
public:
    explicit PoleError(const std::string& what) : DomainError("PoleError", what) {}
};

// Real-branch power does not exist (negative base, even-denominator exponent).
class BranchError : public DomainError {
public:
    explicit BranchError(const std::string& what) : DomainError("BranchError", what) {}
};

// Argument outside an operation's admissible set.
class ParameterError : public DomainError {
public:
    explicit ParameterError(const std::string& what) : DomainError("ParameterError", what) {}
};

// Reflection factor undefined (non-zero integer order).
class SingularError : public DomainError {
public:
    explicit SingularError(const std::string& what) : DomainError("SingularError", what) {}
};

// Zero step handed to a finite-difference sum.
class ZeroStepError : public DomainError {
public:
    explicit ZeroStepError(const std::string& what) : DomainError("ZeroStepError", what) {}
};

// Degenerate coupled evaluation (x = 0, or q = 0 outside the classical case).
class DegenerateError : public DomainError {
public:
    explicit DegenerateError(const std::string& what) : DomainError("DegenerateError", what) {}
};

} // namespace fraclimit
