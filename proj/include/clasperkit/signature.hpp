#pragma once

#include "clasperkit/int_matrix.hpp"

namespace clasperkit {

// Signature of a symmetric integer matrix: positive minus negative eigenvalue
// count, computed exactly by pivoted symmetric elimination over rationals
// (1x1 pivots on nonzero diagonal entries, 2x2 hyperbolic pivots otherwise).
// Throws NotSymmetricError.
int signature(const IntMatrix& s);

}  // namespace clasperkit
