#include "clasperkit/decide.hpp"

#include <ostream>
#include <sstream>

#include "clasperkit/errors.hpp"

namespace clasperkit {

Verdict y_equivalent(const SurgeryPresentation& p, const SurgeryPresentation& q,
                     const Int& two_torsion_cap) {
  FiniteAbelianGroup gp = h1(p), gq = h1(q);
  if (gp != gq)
    return Verdict{Ternary::No, "first homology",
                   gp.to_string() + " vs " + gq.to_string()};
  TorsionPairing tp = torsion_pairing(p), tq = torsion_pairing(q);
  switch (pairing_isomorphic(tp, tq, two_torsion_cap)) {
    case Ternary::No:
      return Verdict{Ternary::No, "torsion linking pairing",
                     pairing_normal_form_summary(tp) + " vs " +
                         pairing_normal_form_summary(tq)};
    case Ternary::Undecided:
      return Verdict{Ternary::Undecided, "2-torsion beyond cap",
                     "2-primary part of order > " + two_torsion_cap.str()};
    case Ternary::Yes:
      break;
  }
  return Verdict{Ternary::Yes, "",
                 "H1 = " + gp.to_string() +
                     ", pairing: " + pairing_normal_form_summary(tp)};
}

Verdict y_equivalent_spin(const SpinPresentation& a, const SpinPresentation& b,
                          const Int& two_torsion_cap) {
  int r8 = r8_pair(a, b);
  if (r8 != 0)
    return Verdict{Ternary::No, "rochlin mod 8",
                   "R(a) - R(b) = " + std::to_string(r8) + " mod 8"};
  Verdict base = y_equivalent(a.presentation(), b.presentation(), two_torsion_cap);
  if (base.outcome != Ternary::Yes) return base;
  base.detail += ", rochlin congruent mod 8";
  return base;
}

InvariantReport invariant_report(const SurgeryPresentation& p,
                                 std::size_t spin_nullity_cap) {
  InvariantReport r;
  r.label = p.label();
  r.linking = p.linking_matrix();
  r.homology = h1(p);
  r.pairing = torsion_pairing(p);
  r.pairing_normal_form = pairing_normal_form_summary(r.pairing);
  r.spins = spin_structures(p, spin_nullity_cap);
  for (const CharSublink& c : r.spins) {
    try {
      r.rochlin_values.push_back(rochlin(SpinPresentation(p, c)));
    } catch (const NeedsDiagramError&) {
      r.rochlin_values.push_back(std::nullopt);
    }
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const InvariantReport& r) {
  if (!r.label.empty()) os << "label: " << r.label << "\n";
  os << "linking matrix: " << r.linking.to_string() << "\n";
  os << "H1: " << r.homology.to_string() << "\n";
  os << "pairing: " << r.pairing.to_string() << "\n";
  os << "pairing normal form: " << r.pairing_normal_form << "\n";
  os << "spins: " << r.spins.size() << "\n";
  for (std::size_t i = 0; i < r.spins.size(); ++i) {
    if (r.rochlin_values[i])
      os << "rochlin: " << *r.rochlin_values[i] << " (mod 16)";
    else
      os << "rochlin: needs-diagram";
    os << "   spin=" << bits_to_string(r.spins[i].bits) << "\n";
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const Verdict& v) {
  switch (v.outcome) {
    case Ternary::Yes:
      os << "Yes";
      break;
    case Ternary::No:
      os << "No (obstruction: " << v.obstruction << ")";
      break;
    case Ternary::Undecided:
      os << "Undecided (" << v.obstruction << ")";
      break;
  }
  if (!v.detail.empty()) os << "\n  " << v.detail;
  return os;
}

}  // namespace clasperkit
