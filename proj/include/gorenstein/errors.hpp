#pragma once

#include <stdexcept>
#include <string>

namespace gorenstein {

/// A vector whose coordinate sum is not an integer was asked for its height.
class NonIntegerHeight : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input does not satisfy the structural hypotheses of an operation
/// (wrong type, zero coordinate, repeated heights, ...).
class InvalidGroup : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical invariant that must hold for valid input failed. Indicates
/// a bug, never a user error.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gorenstein
