#pragma once

#include <stdexcept>

namespace infassoc {

// malformed textual or JSON input
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// structurally valid input that violates an operation's precondition
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// a query needed structure outside the configured window
struct WindowViolation : DomainError {
    using DomainError::DomainError;
};

// a search or enumeration exceeded its configured budget
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace infassoc
