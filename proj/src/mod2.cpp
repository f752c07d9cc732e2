#include "clasperkit/mod2.hpp"

#include <algorithm>

#include "clasperkit/errors.hpp"

namespace clasperkit {

Bits xor_bits(const Bits& a, const Bits& b) {
  if (a.size() != b.size()) throw DimensionError("xor of unequal bit vectors");
  Bits r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] ^ b[i];
  return r;
}

bool all_zero(const Bits& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint8_t b) { return !b; });
}

std::string bits_to_string(const Bits& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += a[i] ? '1' : '0';
  }
  return s + "]";
}

Bits mod2_diagonal(const IntMatrix& a) {
  Bits d;
  d.reserve(std::min(a.rows(), a.cols()));
  for (const Int& x : a.diagonal()) d.push_back(is_odd(x) ? 1 : 0);
  return d;
}

Bits mod2_mat_vec(const IntMatrix& a, const Bits& x) {
  if (x.size() != a.cols()) throw DimensionError("mod-2 matrix-vector shape mismatch");
  Bits y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint8_t acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (x[j] && is_odd(a(i, j))) acc ^= 1;
    y[i] = acc;
  }
  return y;
}

Mod2AffineSolution solve_mod2_affine(const IntMatrix& a, const Bits& b) {
  if (b.size() != a.rows())
    throw DimensionError("solve_mod2_affine: rows != length of b");
  const std::size_t m = a.rows(), n = a.cols();

  // augmented system over GF(2)
  std::vector<Bits> w(m, Bits(n + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = is_odd(a(i, j)) ? 1 : 0;
    w[i][n] = b[i];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t p = rank;
    while (p < m && !w[p][c]) ++p;
    if (p == m) continue;
    std::swap(w[rank], w[p]);
    for (std::size_t i = 0; i < m; ++i)
      if (i != rank && w[i][c]) w[i] = xor_bits(w[i], w[rank]);
    pivot_col.push_back(c);
    ++rank;
  }

  Mod2AffineSolution sol;
  for (std::size_t i = rank; i < m; ++i)
    if (w[i][n]) return sol;  // row 0 = 1: no solution
  sol.consistent = true;

  sol.particular.assign(n, 0);
  for (std::size_t r = 0; r < rank; ++r)
    sol.particular[pivot_col[r]] = w[r][n];

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Bits k(n, 0);
    k[c] = 1;
    for (std::size_t r = 0; r < rank; ++r) k[pivot_col[r]] = w[r][c];
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::size_t mod2_nullity(const IntMatrix& a) {
  Bits zero(a.rows(), 0);
  return solve_mod2_affine(a, zero).kernel.size();
}

}  // namespace clasperkit
