#pragma once

#include <stdexcept>
#include <string>

namespace hcross {

/// Input violates a documented precondition (bad parameters, wrong dimension,
/// theorem hypotheses not met). Maps to CLI exit code 1.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A polynomial frequency cannot be represented on the requested grid.
class AliasingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative or enumerative computation ran out of its work budget.
/// Carries whatever was accumulated so far.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, double partial)
        : std::runtime_error(what), partial_(partial) {}
    double partial() const noexcept { return partial_; }

private:
    double partial_;
};

} // namespace hcross
