#pragma once

#include <stdexcept>
#include <string>

namespace plab {

// Error hierarchy mirrors the CLI exit codes: input/parse problems,
// parameters outside the admissible exponent window, and numerical
// non-convergence are distinct failure classes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};

struct WindowError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    using Error::Error;
};

struct BudgetError : ConvergenceError {
    using ConvergenceError::ConvergenceError;
};

} // namespace plab
