#pragma once

#include <stdexcept>
#include <string>

namespace prym {

// Raised when user-supplied data (files, flags, parameters) is malformed or
// violates a documented precondition.  CLI exit code 1.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an input exceeds a configured size cap.  CLI exit code 1.
struct too_large : invalid_input {
    explicit too_large(const std::string& msg) : invalid_input(msg) {}
};

// Raised when an internal cross-check fails; indicates a bug, not bad input.
// CLI exit code 2.
struct internal_inconsistency : std::logic_error {
    explicit internal_inconsistency(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace prym
