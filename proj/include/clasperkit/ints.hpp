#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace clasperkit {

// Exact arithmetic everywhere; the repo has no floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_odd(const Int& x) { return x % 2 != 0; }
inline bool is_even(const Int& x) { return x % 2 == 0; }

// Least nonnegative residue, also for negative a.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

inline int sgn(const Int& x) { return x.sign(); }

}  // namespace clasperkit
