#pragma once

#include <stdexcept>
#include <string>

namespace abcov {

// Ambient (n, k) of two operands disagree.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An element was required to lie in a subgroup and does not.
struct membership_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad branch configuration: unknown component, re-blown point, ...
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed word / config syntax.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was invoked on input violating its stated precondition
// (singular cover, incomplete coset table, ...).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal exactness guarantee failed (indivisible eigensheaf sum,
// non-integral canonical square, reduction not terminating).
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace abcov
