#pragma once

#include "mealsim/types.hpp"

namespace mealsim {

/// Matrix exponential by scaling-and-squaring with a diagonal Pade core
/// (degrees 3/5/7/9/13 selected from the 1-norm).
Matrix expm(const Matrix& a);

/// Exact state of x' = A x + B u after `dt_min` with constant input u,
/// computed from the exponential of the augmented matrix [[A, B u], [0, 0]].
/// Valid for singular and non-singular A.
Vector linear_step(const Matrix& a, const Matrix& b, const Vector& x0, const Vector& u,
                   double dt_min);

Vector linear_step(const LinearRealization& sys, const Vector& x0, const Vector& u,
                   double dt_min);

}  // namespace mealsim
