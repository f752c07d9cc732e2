#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "clasperkit/pairing.hpp"
#include "clasperkit/spin.hpp"

namespace clasperkit {

// Outcome of a Y-equivalence decision. No always names the obstruction;
// Undecided only arises from 2-torsion beyond the configured cap.
struct Verdict {
  Ternary outcome = Ternary::Undecided;
  std::string obstruction;  // "first homology" | "torsion linking pairing" |
                            // "rochlin mod 8" | "" for Yes
  std::string detail;

  bool yes() const { return outcome == Ternary::Yes; }
};

// Matveev's criterion: closed oriented manifolds are Y-equivalent iff H1 and
// the torsion linking pairings match.
Verdict y_equivalent(const SurgeryPresentation& p, const SurgeryPresentation& q,
                     const Int& two_torsion_cap = 256);

// Massuyeau's criterion: additionally the Rochlin invariants agree mod 8.
Verdict y_equivalent_spin(const SpinPresentation& a, const SpinPresentation& b,
                          const Int& two_torsion_cap = 256);

struct InvariantReport {
  std::string label;
  IntMatrix linking;
  FiniteAbelianGroup homology;
  TorsionPairing pairing;
  std::string pairing_normal_form;
  std::vector<CharSublink> spins;
  // one entry per spin; nullopt when a matrix-only presentation cannot feed
  // the Arf term
  std::vector<std::optional<int>> rochlin_values;
};

InvariantReport invariant_report(const SurgeryPresentation& p,
                                 std::size_t spin_nullity_cap = 20);

std::ostream& operator<<(std::ostream& os, const InvariantReport& r);
std::ostream& operator<<(std::ostream& os, const Verdict& v);

}  // namespace clasperkit
