#pragma once

#include <stdexcept>

namespace limitroots {

// Invalid input: malformed diagram, violated precondition, bad dimension.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numeric procedure could not produce a usable result (solver stall,
// domain violation, degenerate geometry).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration exceeded its element budget.  Never silently truncate.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace limitroots
