#pragma once

#include <stdexcept>
#include <string>

namespace torlist {

// Bad parameter values or malformed input data (CLI exit 2).
struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Structurally valid input that fails a documented precondition,
// e.g. running the coloring pipeline on a non-3-chromatic instance (CLI exit 3).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance exceeds a desk-scale cap; never silently approximated (CLI exit 3).
struct limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A certified internal invariant failed; indicates a bug, carries a
// reproduction bundle in the message where available.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace torlist
