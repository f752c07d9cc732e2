#include <doctest.h>

#include "clasperkit/errors.hpp"
#include "clasperkit/proptest.hpp"
#include "clasperkit/seifert.hpp"

using namespace clasperkit;

namespace {

FramedBraidLink knot(int strands, std::vector<int> word) {
  return FramedBraidLink(strands, std::move(word), std::vector<Int>{0});
}

}  // namespace

TEST_CASE("seifert matrix sizes (loops = bands - disks + 1)") {
  // sigma_1 on two strands: one band, two disks, rank 0
  CHECK(seifert_matrix(knot(2, {1})).v.rows() == 0);
  // trefoil: three bands, two disks
  CHECK(seifert_matrix(knot(2, {1, 1, 1})).v.rows() == 2);
  // unknot on one strand: one disk
  CHECK(seifert_matrix(knot(1, {})).v.rows() == 0);
}

TEST_CASE("determinants of standard knots and links") {
  CHECK(alexander_at_minus_one(seifert_matrix(knot(1, {}))) == 1);
  // trefoil: |det| = 3
  CHECK(abs(alexander_at_minus_one(seifert_matrix(knot(2, {1, 1, 1})))) == 3);
  // figure-eight: |det| = 5
  CHECK(abs(alexander_at_minus_one(
            seifert_matrix(knot(3, {1, -2, 1, -2})))) == 5);
  // cinquefoil: |det| = 5
  CHECK(abs(alexander_at_minus_one(seifert_matrix(knot(2, {1, 1, 1, 1, 1})))) ==
        5);
  // (2,7) torus knot: |det| = 7
  CHECK(abs(alexander_at_minus_one(
            seifert_matrix(knot(2, {1, 1, 1, 1, 1, 1, 1})))) == 7);
  // positive Hopf link: |det| = 2
  FramedBraidLink hopf(2, {1, 1}, {Int(0), Int(0)});
  CHECK(abs(alexander_at_minus_one(seifert_matrix(hopf))) == 2);
  // Borromean rings: |det| = 32
  FramedBraidLink borr(3, {1, -2, 1, -2, 1, -2}, {Int(0), Int(0), Int(0)});
  CHECK(abs(alexander_at_minus_one(seifert_matrix(borr))) == 32);
}

TEST_CASE("disconnected Bennequin surface: error and repair") {
  FramedBraidLink unlink(2, {}, {Int(0), Int(0)});
  CHECK_THROWS_AS(seifert_matrix(unlink), DisconnectedSurfaceError);
  FramedBraidLink repaired = connect_bennequin(unlink);
  CHECK(bennequin_connected(repaired));
  CHECK(repaired.component_count() == 2);
  CHECK(repaired.linking_matrix() == unlink.linking_matrix());
  // a split link has vanishing determinant
  CHECK(alexander_at_minus_one(seifert_matrix(repaired)) == 0);
}

TEST_CASE("arf anchors") {
  CHECK(arf(knot(1, {})) == 0);          // unknot
  CHECK(arf(knot(2, {1, 1, 1})) == 1);   // trefoil, det 3
  CHECK(arf(knot(2, {-1, -1, -1})) == 1);  // left trefoil
  CHECK(arf(knot(3, {1, -2, 1, -2})) == 1);  // figure-eight, det 5
  CHECK(arf(knot(2, {1, 1, 1, 1, 1, 1, 1})) == 0);  // det 7 = -1 mod 8
  // empty link
  CHECK(arf(FramedBraidLink::empty_link()) == 0);
  // Borromean rings are proper (pairwise linking 0); their Arf is 1
  FramedBraidLink borr(3, {1, -2, 1, -2, 1, -2}, {Int(0), Int(0), Int(0)});
  CHECK(arf(borr) == 1);
}

TEST_CASE("arf is undefined exactly for non-proper links") {
  // Hopf link: lk = 1 is odd, not proper
  FramedBraidLink hopf(2, {1, 1}, {Int(0), Int(0)});
  CHECK(!arf(hopf).has_value());
  // (2,4) torus link: lk = 2, proper
  FramedBraidLink t24(2, {1, 1, 1, 1}, {Int(0), Int(0)});
  CHECK(arf(t24).has_value());
}

TEST_CASE("arf of sublinks through masks") {
  FramedBraidLink borr(3, {1, -2, 1, -2, 1, -2}, {Int(0), Int(0), Int(0)});
  CHECK(arf(borr, {0}) == 0);        // unknotted component
  CHECK(arf(borr, {0, 1}) == 0);     // 2-component unlink
  CHECK(arf(borr, {}) == 0);         // empty sublink
  CHECK(arf(borr, {0, 1, 2}) == 1);  // whole Borromean rings
}

TEST_CASE("arf matches the determinant mod 8 criterion on random knots") {
  Rng rng(31);
  PropertyResult r = prop_arf_det_criterion(rng, 100);
  CHECK(r.cases == 100);
  CHECK(r.failures == 0);
}

TEST_CASE("markov stabilization preserves arf") {
  Rng rng(37);
  PropertyResult r = prop_markov_invariance(rng, 40);
  CHECK(r.failures == 0);
}
