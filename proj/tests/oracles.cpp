#include "oracles.hpp"

#include <stdexcept>

#include "clasperkit/rat_matrix.hpp"

namespace clasperkit::oracle {

std::vector<Int> berkowitz_char_poly(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Int> c{1};
  for (std::size_t r = 1; r <= n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R M C, -R M^2 C, ...
    std::vector<Int> t(r + 1);
    t[0] = 1;
    t[1] = -a(r - 1, r - 1);
    std::vector<Int> w(r - 1);
    for (std::size_t i = 0; i + 1 < r; ++i) w[i] = a(i, r - 1);  // C
    for (std::size_t k = 2; k <= r; ++k) {
      Int dot = 0;
      for (std::size_t i = 0; i + 1 < r; ++i) dot += a(r - 1, i) * w[i];
      t[k] = -dot;
      if (k == r) break;
      std::vector<Int> w2(r - 1);
      for (std::size_t i = 0; i + 1 < r; ++i)
        for (std::size_t j = 0; j + 1 < r; ++j) w2[i] += a(i, j) * w[j];
      w = std::move(w2);
    }
    std::vector<Int> c2(r + 1);
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t k = 0; k <= i && k < t.size(); ++k)
        if (i - k < c.size()) c2[i] += t[k] * c[i - k];
    c = std::move(c2);
  }
  return c;
}

int signature_by_char_poly(const IntMatrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("not symmetric");
  std::vector<Int> p = berkowitz_char_poly(a);
  auto sign_changes = [](const std::vector<Int>& coeffs) {
    int changes = 0, last = 0;
    for (const Int& c : coeffs) {
      if (c == 0) continue;
      int s = c > 0 ? 1 : -1;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  int pos = sign_changes(p);
  std::vector<Int> pneg(p.size());
  const std::size_t n = p.size() - 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    pneg[i] = ((n - i) % 2 == 0) ? p[i] : -p[i];
  int neg = sign_changes(pneg);
  return pos - neg;
}

namespace {

Int minor_gcd(const IntMatrix& a, std::size_t k) {
  // gcd over all k x k minors
  Int g = 0;
  std::vector<std::size_t> rsel(k), csel(k);
  auto next_subset = [](std::vector<std::size_t>& s, std::size_t n) {
    std::size_t k2 = s.size();
    std::size_t i = k2;
    while (i > 0) {
      --i;
      if (s[i] + (k2 - i) < n) {
        ++s[i];
        for (std::size_t j = i + 1; j < k2; ++j) s[j] = s[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) rsel[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) csel[i] = i;
    do {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rsel[i], csel[j]);
      g = gcd(g, sub.determinant());
    } while (next_subset(csel, a.cols()));
  } while (next_subset(rsel, a.rows()));
  return abs(g);
}

}  // namespace

std::vector<Int> snf_diagonal_by_minor_gcds(const IntMatrix& a) {
  const std::size_t n = std::min(a.rows(), a.cols());
  std::vector<Int> d(n);
  Int prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Int g = minor_gcd(a, k);
    if (g == 0) {
      for (std::size_t i = k - 1; i < n; ++i) d[i] = 0;
      break;
    }
    d[k - 1] = g / prev;
    prev = g;
  }
  return d;
}

std::vector<Bits> mod2_solutions_brute(const IntMatrix& a, const Bits& b) {
  const std::size_t n = a.cols();
  std::vector<Bits> sols;
  for (std::size_t m = 0; m < (std::size_t(1) << n); ++m) {
    Bits x(n, 0);
    for (std::size_t i = 0; i < n; ++i) x[i] = (m >> i) & 1;
    if (mod2_mat_vec(a, x) == b) sols.push_back(x);
  }
  return sols;
}

Rat linking_value(const IntMatrix& b, const std::vector<Int>& x,
                  const std::vector<Int>& y) {
  RatMatrix inv = rational_inverse(b);
  Rat acc = 0;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      acc += Rat(x[i]) * inv(i, j) * Rat(y[j]);
  acc = -acc;
  // reduce mod 1 to [0,1)
  Int num = numerator(acc), den = denominator(acc);
  Int r = num % den;
  if (r < 0) r += den;
  return Rat(r, den);
}

Int coker_order(const IntMatrix& b, const std::vector<Int>& x) {
  RatMatrix inv = rational_inverse(b);
  Int d = 1;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < b.cols(); ++j) acc += inv(i, j) * Rat(x[j]);
    d = lcm(d, denominator(acc));
  }
  return d;
}

}  // namespace clasperkit::oracle
