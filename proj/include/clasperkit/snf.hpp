#pragma once

#include "clasperkit/int_matrix.hpp"

namespace clasperkit {

// U * A * V = D with U, V unimodular, D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SnfResult {
  IntMatrix u, d, v;
  std::vector<Int> diagonal() const { return d.diagonal(); }
};

// Deterministic Smith normal form: pivot = smallest nonzero absolute value in
// the working submatrix, ties broken by lowest (row, col).
SnfResult smith_normal_form(const IntMatrix& a);

}  // namespace clasperkit
