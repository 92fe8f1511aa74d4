#pragma once

#include <stdexcept>

namespace screening {

// A root bracket failed: either the requested value lies outside [0, mu_max]
// or the residual has no sign change on the bracket.
struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The solved menu violates the L-type's incentive constraint. The reservation
// gap is large enough that the L-type imitates the H contract, a regime this
// solver detects but does not solve.
struct RegimeUnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure in an estimator or an out-of-range utility mean.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace screening
