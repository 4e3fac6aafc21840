#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fdecomp/linalg.hpp"
#include "fdecomp/numeric.hpp"

namespace fdecomp {

// coefficients . x + constant <= 0 over unrestricted rational variables.
struct LinearConstraint {
    RatVector coefficients;
    Rat constant;
};

// Exact Fourier-Motzkin elimination. Returns a satisfying point or nullopt if
// the system is infeasible. Throws std::length_error when the intermediate
// constraint count exceeds max_constraints.
std::optional<RatVector> fourier_motzkin_feasible(
    std::vector<LinearConstraint> constraints, std::size_t nvars,
    std::size_t max_constraints = 200'000);

// Exact phase-1 simplex with Bland's rule (free variables split into
// positive/negative parts). Same contract, no size limit.
std::optional<RatVector> simplex_feasible(
    const std::vector<LinearConstraint>& constraints, std::size_t nvars);

// Dispatcher: Fourier-Motzkin for small systems (<= 40 variables), exact
// simplex beyond that or when elimination blows up.
std::optional<RatVector> feasible_point(
    const std::vector<LinearConstraint>& constraints, std::size_t nvars);

}  // namespace fdecomp
