#pragma once

#include <stdexcept>
#include <string>

namespace eulercert {

// Malformed text input; the message names the offending token or line.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A degree slice would exceed the configured bit budget.
struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// The Groebner and linear-algebra engines disagreed on a verdict.
struct EngineMismatchError : std::runtime_error {
    explicit EngineMismatchError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eulercert
