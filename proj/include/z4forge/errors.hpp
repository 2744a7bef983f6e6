#pragma once

#include <stdexcept>
#include <string>

namespace z4forge {

// Bad input: parse failures, unknown artifact names, violated operation
// preconditions. Maps to CLI exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration guard tripped: the requested computation would exceed the
// desk-scale step budget. Maps to CLI exit code 2.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bounded search ran out of budget before finding what it was asked for.
// Maps to CLI exit code 3.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace z4forge
