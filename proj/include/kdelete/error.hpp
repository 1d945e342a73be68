#pragma once

#include <stdexcept>
#include <string>

namespace kdelete {

/// Thrown when an input exceeds a documented practical-size guard
/// (clique order, cycle length, enumeration size).
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exhaustive search ran past its state budget.
class BudgetExceeded : public CapabilityError {
public:
    using CapabilityError::CapabilityError;
};

/// A verified structural precondition does not hold. `kind()` names the
/// failure (TriangleFound, CliqueFound, OddGirthTooSmall, ...).
class PreconditionViolation : public std::runtime_error {
public:
    PreconditionViolation(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

} // namespace kdelete
