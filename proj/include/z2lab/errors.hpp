#pragma once

#include <stdexcept>
#include <string>

namespace z2lab {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad files, shape mismatches, out-of-range parameters.
// The CLI maps this to exit code 2.
struct InputError : Error {
    using Error::Error;
};

// Integer overflow while generating a set (e.g. powers past 2^62).
struct OverflowError : InputError {
    using InputError::InputError;
};

// A requested construction exceeds the configured dimension cap.
struct DimensionCapError : InputError {
    using InputError::InputError;
};

// Raised by the converse-theorem audit when a set has Z2 >= 7 but none of
// the three forbidden patterns can be found.  This would contradict the
// case analysis behind the converse theorem, so it signals a fault in the
// pattern search rather than a property of the input.  CLI exit code 3.
struct TheoremContradictionError : Error {
    using Error::Error;
};

}  // namespace z2lab
