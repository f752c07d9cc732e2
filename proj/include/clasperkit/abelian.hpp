#pragma once

#include <string>
#include <vector>

#include "clasperkit/ints.hpp"

namespace clasperkit {

// Finite-rank abelian group in invariant-factor form:
// Z/d1 + Z/d2 + ... + Z^r with 2 <= d1 | d2 | ...
struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;
  std::size_t free_rank = 0;

  bool operator==(const FiniteAbelianGroup& o) const {
    return invariant_factors == o.invariant_factors && free_rank == o.free_rank;
  }
  bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

  bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
  Int torsion_order() const;
  std::string to_string() const;  // "0", "Z/5", "Z/2 + Z/4 + Z^2", ...
};

// Invariant factors of an arbitrary multiset of cyclic orders (each > 1).
std::vector<Int> invariant_factors_from_orders(std::vector<Int> orders);

// Exact rational mod 1, normalized to [0, 1).
struct QmodZ {
  Rat v;  // reduced, 0 <= v < 1

  QmodZ() : v(0) {}
  explicit QmodZ(const Rat& r) : v(normalized(r)) {}
  QmodZ(const Int& num, const Int& den) : QmodZ(Rat(num, den)) {}

  static Rat normalized(const Rat& r);

  QmodZ operator+(const QmodZ& o) const { return QmodZ(v + o.v); }
  QmodZ times(const Int& k) const { return QmodZ(v * Rat(k)); }
  bool operator==(const QmodZ& o) const { return v == o.v; }
  bool operator!=(const QmodZ& o) const { return v != o.v; }
  bool is_zero() const { return v == 0; }

  // annihilator: least n >= 1 with n*this = 0
  Int order() const { return denominator(v); }

  std::string to_string() const;           // canonical representative in [0,1)
  std::string to_string_balanced() const;  // representative in (-1/2, 1/2]
};

}  // namespace clasperkit
