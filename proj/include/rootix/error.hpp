#pragma once

#include <stdexcept>

namespace rootix {

/// Caller-supplied data violates a documented precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace rootix
