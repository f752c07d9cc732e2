#include "clasperkit/spin.hpp"

#include <algorithm>

#include "clasperkit/errors.hpp"
#include "clasperkit/seifert.hpp"
#include "clasperkit/signature.hpp"
#include "clasperkit/snf.hpp"

namespace clasperkit {

bool is_characteristic(const IntMatrix& b, const Bits& c) {
  if (c.size() != b.rows()) return false;
  return mod2_mat_vec(b, c) == mod2_diagonal(b);
}

SpinPresentation::SpinPresentation(SurgeryPresentation presentation,
                                   CharSublink chr)
    : presentation_(std::move(presentation)), chr_(std::move(chr)) {
  if (!is_characteristic(presentation_.linking_matrix(), chr_.bits))
    throw ValidationError("spin vector is not a characteristic sublink");
}

std::vector<CharSublink> spin_structures(const SurgeryPresentation& p,
                                         std::size_t nullity_cap) {
  IntMatrix b = p.linking_matrix();
  auto sol = solve_mod2_affine(b, mod2_diagonal(b));
  if (!sol.consistent)
    throw Error("internal: characteristic system of a symmetric matrix "
                "is always solvable");
  if (sol.kernel.size() > nullity_cap)
    throw SizeCapError("spin enumeration would need 2^" +
                       std::to_string(sol.kernel.size()) +
                       " structures (cap 2^" + std::to_string(nullity_cap) +
                       ")");
  std::vector<CharSublink> out;
  out.reserve(std::size_t(1) << sol.kernel.size());
  for (std::size_t m = 0; m < (std::size_t(1) << sol.kernel.size()); ++m) {
    Bits c = sol.particular;
    for (std::size_t i = 0; i < sol.kernel.size(); ++i)
      if (m & (std::size_t(1) << i)) c = xor_bits(c, sol.kernel[i]);
    out.push_back(CharSublink{std::move(c)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bits> orientable_twist_basis(const SurgeryPresentation& p) {
  IntMatrix b = p.linking_matrix();
  SnfResult snf = smith_normal_form(b);
  // columns of V at zero diagonal entries span the integer kernel
  std::vector<Bits> basis;
  std::vector<Int> diag = snf.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] != 0) continue;
    Bits k(b.rows(), 0);
    bool nonzero = false;
    for (std::size_t r = 0; r < b.rows(); ++r) {
      k[r] = is_odd(snf.v(r, i)) ? 1 : 0;
      nonzero = nonzero || k[r];
    }
    if (nonzero) basis.push_back(std::move(k));
  }
  return basis;
}

SpinPresentation twist(const SpinPresentation& s, const Bits& kappa) {
  IntMatrix b = s.presentation().linking_matrix();
  if (kappa.size() != b.rows())
    throw DimensionError("twist vector length != component count");
  if (!all_zero(mod2_mat_vec(b, kappa)))
    throw NotAKernelElementError("twist vector is not in ker(B mod 2)");
  return SpinPresentation(s.presentation(),
                          CharSublink{xor_bits(s.chr().bits, kappa)});
}

int rochlin(const SpinPresentation& s) {
  const IntMatrix b = s.presentation().linking_matrix();
  const Bits& c = s.chr().bits;

  Int cc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i]) continue;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j]) cc += b(i, j);
  }

  int arf_c = 0;
  if (!all_zero(c)) {
    if (!s.presentation().is_diagram())
      throw NeedsDiagramError(
          "Rochlin of a matrix-only presentation needs an empty "
          "characteristic sublink");
    std::vector<int> mask;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i]) mask.push_back(static_cast<int>(i));
    auto a = arf(s.presentation().link(), mask);
    if (!a)
      throw ArfUndefinedError(
          "Arf undefined on a characteristic sublink; presentation data is "
          "inconsistent");
    arf_c = *a;
  }

  Int r = Int(signature(b)) - cc + 8 * arf_c;
  return static_cast<int>(mod_floor(r, 16));
}

int r8_pair(const SpinPresentation& a, const SpinPresentation& b) {
  return static_cast<int>(mod_floor(Int(rochlin(a) - rochlin(b)), 8));
}

}  // namespace clasperkit
