#include <doctest.h>

#include <sstream>

#include "clasperkit/clasper.hpp"
#include "clasperkit/decide.hpp"
#include "clasperkit/proptest.hpp"

using namespace clasperkit;

namespace {

SurgeryPresentation mat(IntMatrix b, std::string label = "") {
  return SurgeryPresentation::matrix_only(std::move(b), std::move(label));
}

}  // namespace

TEST_CASE("lens space pairing decision: L(5,1) vs (2,3)-chain") {
  Verdict v = y_equivalent(mat(IntMatrix{{5}}), mat(IntMatrix{{2, 1}, {1, 3}}));
  CHECK(v.outcome == Ternary::No);
  CHECK(v.obstruction == "torsion linking pairing");
}

TEST_CASE("order-7 pair with both discriminant classes matching") {
  // 7-framed unknot vs the (2,4)-chain: both Z/7, and 2 = 3^2 mod 7
  Verdict v = y_equivalent(mat(IntMatrix{{7}}), mat(IntMatrix{{2, 1}, {1, 4}}));
  CHECK(v.outcome == Ternary::Yes);
}

TEST_CASE("reflexivity and symmetry") {
  SurgeryPresentation p = mat(IntMatrix{{2, 1}, {1, 3}});
  SurgeryPresentation q = mat(IntMatrix{{5}});
  CHECK(y_equivalent(p, p).outcome == Ternary::Yes);
  CHECK(y_equivalent(p, q).outcome == y_equivalent(q, p).outcome);
}

TEST_CASE("homology obstruction is named") {
  Verdict v = y_equivalent(mat(IntMatrix{{5}}), mat(IntMatrix{{7}}));
  CHECK(v.outcome == Ternary::No);
  CHECK(v.obstruction == "first homology");
}

TEST_CASE("spin verdicts") {
  SpinPresentation s3(SurgeryPresentation::diagram(FramedBraidLink::empty_link()),
                      CharSublink{{}});
  FramedBraidLink tref(2, {-1, -1, -1}, {Int(1)});
  SpinPresentation poincare(SurgeryPresentation::diagram(tref), CharSublink{{1}});

  // trivial groups, R = 0 vs 8, 8 = 0 mod 8
  CHECK(y_equivalent_spin(s3, poincare).outcome == Ternary::Yes);
  CHECK(y_equivalent_spin(s3, s3).outcome == Ternary::Yes);

  // both spins of S^1 x S^2 have R = 0: verdict Yes
  FramedBraidLink unknot0(1, {}, {Int(0)});
  SurgeryPresentation p = SurgeryPresentation::diagram(unknot0);
  SpinPresentation a(p, CharSublink{{0}});
  SpinPresentation b(p, CharSublink{{1}});
  CHECK(y_equivalent_spin(a, b).outcome == Ternary::Yes);

  // S^3 vs L(5,1): groups differ
  FramedBraidLink unknot5(1, {}, {Int(5)});
  SpinPresentation lens(SurgeryPresentation::diagram(unknot5), CharSublink{{1}});
  Verdict v = y_equivalent_spin(s3, lens);
  CHECK(v.outcome == Ternary::No);

  // L(5,1) via +5 vs -5 framing: pairings -1/5 and 1/5 are isomorphic
  // (a=2: 4*(-1) = 1 mod 5) and R = 12 vs 4 agree mod 8, so Yes
  FramedBraidLink unknot_m5(1, {}, {Int(-5)});
  SpinPresentation lens_m(SurgeryPresentation::diagram(unknot_m5),
                          CharSublink{{1}});
  CHECK(y_equivalent_spin(lens, lens_m).outcome == Ternary::Yes);
}

TEST_CASE("rochlin mod 8 obstruction fires when pairings agree") {
  // the two spin structures of L(4,1): R = 1 and 1 - 4 = -3 = 13 mod 16,
  // differing by 4 mod 8; the underlying manifolds are identical
  FramedBraidLink u4(1, {}, {Int(4)});
  SurgeryPresentation p = SurgeryPresentation::diagram(u4);
  SpinPresentation a(p, CharSublink{{0}});
  SpinPresentation b(p, CharSublink{{1}});
  CHECK(rochlin(a) == 1);
  CHECK(rochlin(b) == 13);
  CHECK(y_equivalent(p, p).outcome == Ternary::Yes);
  Verdict v = y_equivalent_spin(a, b);
  CHECK(v.outcome == Ternary::No);
  CHECK(v.obstruction == "rochlin mod 8");
}

TEST_CASE("soundness vs surgery: clasper lists preserve both verdicts") {
  Rng rng(97);
  for (int t = 0; t < 10; ++t) {
    SurgeryPresentation p = random_diagram_presentation(rng, 4, 6, 2);
    std::vector<ClasperSpec> specs;
    SurgeryPresentation q = p;
    for (int i = 0; i < 2; ++i) {
      ClasperSpec spec = random_clasper_spec(rng, q.link());
      specs.push_back(spec);
      q = insert_clasper(q, spec).presentation;
    }
    CHECK(y_equivalent(p, q).outcome == Ternary::Yes);

    auto spins = spin_structures(p);
    SpinPresentation sp(p, spins[rand_range(rng, 0, spins.size() - 1)]);
    SpinPresentation sq = apply_claspers(sp, specs);
    CHECK(y_equivalent_spin(sp, sq).outcome == Ternary::Yes);
  }
}

TEST_CASE("no-2-torsion consistency search") {
  Rng rng(101);
  PropertyResult r = prop_no_2torsion_consistency(rng, 30);
  CHECK(r.failures == 0);
}

TEST_CASE("invariant report fields") {
  InvariantReport s3 = invariant_report(
      SurgeryPresentation::diagram(FramedBraidLink::empty_link(), "s3"));
  CHECK(s3.homology.is_trivial());
  CHECK(s3.pairing.size() == 0);
  CHECK(s3.spins.size() == 1);
  REQUIRE(s3.rochlin_values.size() == 1);
  CHECK(s3.rochlin_values[0] == 0);

  InvariantReport lens = invariant_report(mat(IntMatrix{{5}}, "lens_5_1"));
  CHECK(lens.homology.to_string() == "Z/5");
  CHECK(lens.pairing.to_string() == "[-1/5]");
  CHECK(lens.spins.size() == 1);
  CHECK(!lens.rochlin_values[0].has_value());  // needs diagram

  FramedBraidLink borr(3, {1, -2, 1, -2, 1, -2}, {Int(0), Int(0), Int(0)});
  InvariantReport torus = invariant_report(
      SurgeryPresentation::diagram(borr, "3-torus"));
  CHECK(torus.homology.to_string() == "Z^3");
  CHECK(torus.spins.size() == 8);

  std::ostringstream os;
  os << lens;
  CHECK(os.str().find("H1: Z/5") != std::string::npos);
  CHECK(os.str().find("pairing: [-1/5]") != std::string::npos);
}
