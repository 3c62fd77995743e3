#pragma once

#include <stdexcept>
#include <string>

namespace sidewave {

/// Input failed a precondition or structural invariant.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A time march produced a non-finite state and was stopped.
class SolverAbort : public std::runtime_error {
public:
    SolverAbort(const std::string& what, long step)
        : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_(step) {}
    long step() const { return step_; }

private:
    long step_;
};

}  // namespace sidewave
