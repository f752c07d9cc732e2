#include "clasperkit/snf.hpp"

#include <optional>
#include <utility>

namespace clasperkit {

namespace {

struct Pivot {
  std::size_t row, col;
  Int abs_val;
};

std::optional<Pivot> find_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<Pivot> best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int a = abs(d(i, j));
      if (!best || a < best->abs_val) best = Pivot{i, j, a};
      // scan order already gives the lowest (row, col) among ties
    }
  return best;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

bool lone_pivot(const IntMatrix& d, std::size_t t) {
  for (std::size_t i = t + 1; i < d.rows(); ++i)
    if (d(i, t) != 0) return false;
  for (std::size_t j = t + 1; j < d.cols(); ++j)
    if (d(t, j) != 0) return false;
  return true;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfResult r{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& d = r.d;
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto piv = find_pivot(d, t);
      if (!piv) goto done;  // remaining submatrix is zero
      swap_rows(d, t, piv->row);
      swap_rows(r.u, t, piv->row);
      swap_cols(d, t, piv->col);
      swap_cols(r.v, t, piv->col);

      for (std::size_t i = t + 1; i < m; ++i)
        if (d(i, t) != 0) {
          Int q = d(i, t) / d(t, t);
          add_row(d, i, t, -q);
          add_row(r.u, i, t, -q);
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (d(t, j) != 0) {
          Int q = d(t, j) / d(t, t);
          add_col(d, j, t, -q);
          add_col(r.v, j, t, -q);
        }
      if (!lone_pivot(d, t)) continue;  // remainders left, shrink again

      // pivot must divide everything below-right or we fold a bad row in
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            add_row(d, t, i, 1);
            add_row(r.u, t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < m; ++j) r.u(t, j) = -r.u(t, j);
    }
  }
done:
  return r;
}

}  // namespace clasperkit
