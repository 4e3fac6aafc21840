#pragma once

#include <optional>
#include <vector>

#include "fdecomp/numeric.hpp"

namespace fdecomp {

using RatVector = std::vector<Rat>;

/**
 * Finds exact rational coefficients lambda, not all zero, with
 * sum_i lambda_i * vectors[i] = 0. Returns nullopt only when the set is
 * linearly independent (impossible once the number of vectors exceeds their
 * dimension).
 *
 * Output is deterministic: rational Gaussian elimination with first-nonzero
 * pivots, lambda scaled to integer entries with gcd 1 and a positive first
 * nonzero entry.
 */
std::optional<RatVector> nullspace_combination(const std::vector<RatVector>& vectors);

// Particular solution of rows * x = rhs (free variables set to zero), or
// nullopt when the system is inconsistent.
std::optional<RatVector> solve_linear_system(const std::vector<RatVector>& rows,
                                             const RatVector& rhs);

// Scales a rational vector in place to integer entries with gcd 1 and a
// positive first nonzero entry. The zero vector is left untouched.
void normalize_primitive(RatVector& v);

}  // namespace fdecomp
