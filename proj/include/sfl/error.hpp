#pragma once

#include <stdexcept>
#include <string>

namespace sfl {

// Raised when an exponential-time operation would exceed its configured
// size or wall-clock budget. Callers surface this as a distinct outcome
// (CLI exit 2) rather than a generic failure.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a construction's preconditions fail for the given parameters,
// with the precise inequality that failed.
struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sfl
