#pragma once

#include <stdexcept>
#include <string>

namespace akb {

/// Malformed or out-of-contract input (bad shapes, unequal sizes, caps).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of a computation does not hold for this input.
class HypothesisError : public InputError {
public:
    using InputError::InputError;
};

/// An embedded check failed. `check()` names the property that broke.
class VerificationError : public std::runtime_error {
public:
    VerificationError(std::string check, const std::string& detail)
        : std::runtime_error(check + ": " + detail), check_(std::move(check)) {}

    const std::string& check() const noexcept { return check_; }

private:
    std::string check_;
};

}  // namespace akb
