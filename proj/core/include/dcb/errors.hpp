#pragma once

#include <stdexcept>
#include <string>

namespace dcb {

// Bad user-supplied configuration (unsupported cluster size, malformed file).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal bookkeeping inconsistency (ledger underflow, releasing an unheld
// channel). Indicates a bug in the caller or the engine, not bad user input.
class StateError : public std::runtime_error {
public:
    explicit StateError(const std::string& msg) : std::runtime_error(msg) {}
};

// Measurement requested from a run too short to be meaningful.
class InsufficientDataError : public std::runtime_error {
public:
    explicit InsufficientDataError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace dcb
