#pragma once

#include <stdexcept>
#include <string>

namespace koebe {

/// Malformed or inconsistent input (bad document, precondition violated).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative numeric method failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search exceeded its configured expansion budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A certificate or internal consistency check failed. Indicates a bug in
/// this library rather than bad input.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace koebe
