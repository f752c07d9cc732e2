#include "clasperkit/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "clasperkit/errors.hpp"

namespace clasperkit {

Int FiniteAbelianGroup::torsion_order() const {
  Int n = 1;
  for (const Int& d : invariant_factors) n *= d;
  return n;
}

std::string FiniteAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Int& d : invariant_factors) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  if (free_rank > 0) {
    if (!first) os << " + ";
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
  }
  return os.str();
}

namespace {

std::map<Int, int> factorize(Int n) {
  std::map<Int, int> f;
  for (Int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

}  // namespace

std::vector<Int> invariant_factors_from_orders(std::vector<Int> orders) {
  // prime powers per prime, largest first; factor i multiplies the i-th
  // largest power of every prime
  std::map<Int, std::vector<int>> powers;
  std::size_t slots = 0;
  for (const Int& o : orders) {
    if (o < 2) throw ValidationError("cyclic order must be >= 2");
    for (const auto& [p, e] : factorize(o)) powers[p].push_back(e);
  }
  for (auto& [p, es] : powers) {
    std::sort(es.rbegin(), es.rend());
    slots = std::max(slots, es.size());
  }
  std::vector<Int> factors(slots, 1);
  for (const auto& [p, es] : powers)
    for (std::size_t i = 0; i < es.size(); ++i) {
      Int pk = 1;
      for (int k = 0; k < es[i]; ++k) pk *= p;
      factors[i] *= pk;
    }
  std::reverse(factors.begin(), factors.end());  // ascending divisibility
  return factors;
}

Rat QmodZ::normalized(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  return Rat(mod_floor(num, den), den);
}

std::string QmodZ::to_string() const {
  std::ostringstream os;
  if (denominator(v) == 1)
    os << numerator(v);
  else
    os << numerator(v) << "/" << denominator(v);
  return os.str();
}

std::string QmodZ::to_string_balanced() const {
  Rat r = v;
  if (2 * numerator(r) > denominator(r)) r -= 1;
  std::ostringstream os;
  if (denominator(r) == 1)
    os << numerator(r);
  else
    os << numerator(r) << "/" << denominator(r);
  return os.str();
}

}  // namespace clasperkit
