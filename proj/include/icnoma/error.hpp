#pragma once

#include <stdexcept>
#include <string>

namespace icnoma {

/// Input that violates a documented precondition or schema.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The exact solver refused an instance that exceeds its configured bound.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace icnoma
