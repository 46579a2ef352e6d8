#pragma once
#include <stdexcept>
#include <string>

namespace ftft {

// Malformed input (bad table shape, wrong dimensions, unparsable text).
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input the library does not handle (size bounds, trivial c, ...).
struct UnsupportedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ftft
