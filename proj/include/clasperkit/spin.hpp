#pragma once

#include <vector>

#include "clasperkit/mod2.hpp"
#include "clasperkit/presentation.hpp"

namespace clasperkit {

// Characteristic sublink: mod-2 component vector C with B C = diag(B) mod 2.
// These coordinates are the spin structures of the surgered manifold.
struct CharSublink {
  Bits bits;
  bool operator==(const CharSublink& o) const { return bits == o.bits; }
  bool operator<(const CharSublink& o) const { return bits < o.bits; }
};

bool is_characteristic(const IntMatrix& b, const Bits& c);

class SpinPresentation {
 public:
  SpinPresentation(SurgeryPresentation presentation, CharSublink chr);
  const SurgeryPresentation& presentation() const { return presentation_; }
  const CharSublink& chr() const { return chr_; }

 private:
  SurgeryPresentation presentation_;
  CharSublink chr_;
};

// All characteristic sublinks, lexicographically sorted. Count is
// 2^(mod-2 nullity of B); throws SizeCapError when the nullity exceeds the cap.
std::vector<CharSublink> spin_structures(const SurgeryPresentation& p,
                                         std::size_t nullity_cap = 20);

// Spin twist along a closed surface class: kappa must lie in ker(B mod 2).
SpinPresentation twist(const SpinPresentation& s, const Bits& kappa);

// Twist classes realized by closed *orientable* surfaces: the mod-2
// reductions of an integer kernel basis of B. Twisting by these preserves
// the Rochlin invariant mod 8; general mod-2 kernel vectors need not
// (RP^3 has ker(B mod 2) = Z_2 but integer kernel 0, and its two spin
// structures have R = 1 and 15).
std::vector<Bits> orientable_twist_basis(const SurgeryPresentation& p);

// Rochlin invariant via the surgery formula
//   R = sig(B) - C.B.C + 8 Arf(C)  (mod 16),
// where C.B.C sums B over ordered pairs of C-components (framings included).
// Needs a diagram unless C is empty. Result normalized to [0, 16).
int rochlin(const SpinPresentation& s);

// (R(a) - R(b)) mod 8; the Y-equivalence obstruction for closed spin pairs.
int r8_pair(const SpinPresentation& a, const SpinPresentation& b);

}  // namespace clasperkit
