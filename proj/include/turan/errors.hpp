#pragma once

#include <stdexcept>

namespace turan {

/// Thrown when a construction would exceed the 128-vertex capacity or a
/// search family would explode past its documented envelope.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a bound query falls outside the regime the theorems cover
/// (odd-ballooning bounds require t >= 5).
class ScopeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace turan
