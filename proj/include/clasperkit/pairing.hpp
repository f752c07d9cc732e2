#pragma once

#include <string>
#include <vector>

#include "clasperkit/abelian.hpp"
#include "clasperkit/presentation.hpp"

namespace clasperkit {

// Symmetric Q/Z-valued pairing on generators of a finite abelian group.
// Convention throughout: lambda = -B^{-1} on torsion generators, so the
// p-framed unknot (lens space) has lambda(g,g) = -1/p.
struct TorsionPairing {
  std::vector<Int> orders;    // generator orders, each > 1
  std::vector<QmodZ> values;  // k x k, row-major

  std::size_t size() const { return orders.size(); }
  const QmodZ& at(std::size_t i, std::size_t j) const {
    return values[i * orders.size() + j];
  }
  QmodZ& at(std::size_t i, std::size_t j) {
    return values[i * orders.size() + j];
  }

  Int group_order() const;
  FiniteAbelianGroup group() const;

  // o_i * lambda(g_i, g_j) = 0 and symmetry, exactly.
  bool bilinear_ok() const;

  // Injectivity of the adjoint map G -> Hom(G, Q/Z), decided exactly at any
  // size via the Smith form of [N | diag(o)].
  bool nondegenerate() const;

  bool operator==(const TorsionPairing& o) const {
    return orders == o.orders && values == o.values;
  }
  std::string to_string() const;
};

// Diagonal pairing <v_1> + ... + <v_k>; orders inferred from denominators.
TorsionPairing diagonal_pairing(const std::vector<QmodZ>& diag);

// First homology of the surgered manifold: coker(B) in invariant-factor form.
FiniteAbelianGroup h1(const SurgeryPresentation& p);

// Torsion linking pairing extracted from the linking matrix through SNF.
TorsionPairing torsion_pairing(const SurgeryPresentation& p);

enum class Ternary { Yes, No, Undecided };

// Decision procedure for pairing isomorphism: complete on odd torsion
// (homogeneous block ranks + Legendre class of block discriminants),
// capped brute force on the 2-primary part, Undecided beyond the cap.
// Throws DegeneratePairingError on degenerate input.
Ternary pairing_isomorphic(const TorsionPairing& a, const TorsionPairing& b,
                           const Int& two_torsion_cap = 256);

// Exhaustive search over group isomorphisms; ground truth for tests.
// Throws SizeCapError when the group order exceeds size_cap.
bool pairing_brute_force_isomorphic(const TorsionPairing& a,
                                    const TorsionPairing& b,
                                    const Int& size_cap = 10000);

// Per-prime normal-form summary: block ranks and discriminant classes for the
// odd part, raw orders for the 2-part.
std::string pairing_normal_form_summary(const TorsionPairing& t);

}  // namespace clasperkit
