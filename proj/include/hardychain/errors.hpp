// errors.hpp
// Exception types shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace hardychain {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A chain member or Hardy variant violates its index constraints.
class invalid_member_error : public error {
public:
    using error::error;
};

// Mismatched qubit counts or matrix/vector dimensions.
class dimension_error : public error {
public:
    using error::error;
};

// Requested size exceeds an enumeration or diagonalization cap.
class resource_limit_error : public error {
public:
    using error::error;
};

// Malformed input values (non-unit axis, unnormalized state, bad weights, ...).
class validation_error : public error {
public:
    using error::error;
};

// A formula hit a removable singularity (vanishing denominator).
class singularity_error : public error {
public:
    using error::error;
};

// An iterative routine exhausted its budget without reaching tolerance.
class convergence_error : public error {
public:
    using error::error;
};

} // namespace hardychain
