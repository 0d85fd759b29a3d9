#pragma once

#include <stdexcept>
#include <string>

namespace thaforge {

// Invalid algebra specification (unknown type, bad rank, malformed input).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string &m) : std::runtime_error(m) {}
};

// The extended matrix B is singular and an inverse-dependent quantity
// was requested. Reportable, not a crash: the CLI explains the rejection.
struct SingularBError : std::runtime_error {
    explicit SingularBError(const std::string &m) : std::runtime_error(m) {}
};

// A check suite was invoked on inputs that do not satisfy its premises
// (e.g. theorem verification on a non-pseudo-minuscule weight).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string &m) : std::runtime_error(m) {}
};

// A product or bracket was requested outside its domain of definition
// (degree sums outside {-1,0,1}, mismatched pairings).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string &m) : std::runtime_error(m) {}
};

} // namespace thaforge
