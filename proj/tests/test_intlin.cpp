#include <doctest.h>

#include "clasperkit/errors.hpp"
#include "clasperkit/mod2.hpp"
#include "clasperkit/proptest.hpp"
#include "clasperkit/rat_matrix.hpp"
#include "clasperkit/signature.hpp"
#include "clasperkit/snf.hpp"
#include "oracles.hpp"

using namespace clasperkit;

namespace {

// standard E8 form: -2 on the diagonal, tree edges 1-2-3-4-5-6-7, 5-8
IntMatrix e8_matrix() {
  IntMatrix m(8, 8);
  for (int i = 0; i < 8; ++i) m(i, i) = -2;
  auto edge = [&m](int a, int b) {
    m(a, b) = 1;
    m(b, a) = 1;
  };
  for (int i = 0; i < 6; ++i) edge(i, i + 1);
  edge(4, 7);
  return m;
}

}  // namespace

TEST_CASE("snf of diag(6,4) is diag(2,12)") {
  SnfResult r = smith_normal_form(IntMatrix{{6, 0}, {0, 4}});
  CHECK(r.diagonal() == std::vector<Int>{2, 12});
  // oracle: gcd of entries / gcd of 2x2 minors
  CHECK(oracle::snf_diagonal_by_minor_gcds(IntMatrix{{6, 0}, {0, 4}}) ==
        std::vector<Int>{2, 12});
}

TEST_CASE("snf of the empty matrix is empty") {
  SnfResult r = smith_normal_form(IntMatrix());
  CHECK(r.d.rows() == 0);
  CHECK(r.u.rows() == 0);
  CHECK(r.v.rows() == 0);
}

TEST_CASE("snf of [[2,4],[6,8]] is diag(2,4)") {
  IntMatrix a{{2, 4}, {6, 8}};
  SnfResult r = smith_normal_form(a);
  CHECK(r.diagonal() == std::vector<Int>{2, 4});
  CHECK(r.u * a * r.v == r.d);
  CHECK(oracle::snf_diagonal_by_minor_gcds(a) == std::vector<Int>{2, 4});
}

TEST_CASE("snf diagonal matches the minor-gcd oracle on random matrices") {
  Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    IntMatrix a = random_matrix(rng, 5, 5, 9);
    CHECK(smith_normal_form(a).diagonal() ==
          oracle::snf_diagonal_by_minor_gcds(a));
  }
}

TEST_CASE("snf transforms match the documented worked example") {
  // docs/pairing-generators.md walks through this decomposition
  SnfResult r = smith_normal_form(IntMatrix{{2, 1}, {1, 3}});
  CHECK(r.u == IntMatrix{{1, 0}, {3, -1}});
  CHECK(r.d == IntMatrix{{1, 0}, {0, 5}});
  CHECK(r.v == IntMatrix{{0, 1}, {1, -2}});
}

TEST_CASE("snf is deterministic") {
  Rng rng(11);
  IntMatrix a = random_matrix(rng, 6, 6, 50);
  SnfResult r1 = smith_normal_form(a);
  SnfResult r2 = smith_normal_form(a);
  CHECK(r1.u == r2.u);
  CHECK(r1.v == r2.v);
}

TEST_CASE("signature basics") {
  CHECK(signature(IntMatrix{{0}}) == 0);
  CHECK(signature(IntMatrix{{0, 1}, {1, 0}}) == 0);
  CHECK(signature(IntMatrix()) == 0);
  CHECK(signature(IntMatrix{{3}}) == 1);
  CHECK(signature(IntMatrix{{-3}}) == -1);
  CHECK_THROWS_AS(signature(IntMatrix{{0, 1}, {2, 0}}), NotSymmetricError);
}

TEST_CASE("signature of E8 is -8") {
  IntMatrix e8 = e8_matrix();
  CHECK(e8.determinant() == 1);
  CHECK(signature(e8) == -8);
  CHECK(oracle::signature_by_char_poly(e8) == -8);
}

TEST_CASE("signature agrees with the char-poly oracle on random matrices") {
  Rng rng(13);
  for (int t = 0; t < 80; ++t) {
    IntMatrix s = random_symmetric(rng, rand_range(rng, 0, 6), 9);
    CHECK(signature(s) == oracle::signature_by_char_poly(s));
  }
}

TEST_CASE("rational inverse") {
  RatMatrix inv = rational_inverse(IntMatrix{{5}});
  CHECK(inv(0, 0) == Rat(1, 5));

  IntMatrix s{{2, 1}, {1, 3}};
  RatMatrix si = rational_inverse(s);
  CHECK(si(0, 0) == Rat(3, 5));
  CHECK(si(0, 1) == Rat(-1, 5));
  CHECK(si(1, 0) == Rat(-1, 5));
  CHECK(si(1, 1) == Rat(2, 5));
  CHECK(RatMatrix(s) * si == RatMatrix::identity(2));

  CHECK(rational_inverse(IntMatrix::identity(3)) == RatMatrix::identity(3));
  CHECK_THROWS_AS(rational_inverse(IntMatrix{{1, 1}, {1, 1}}), SingularError);
}

TEST_CASE("solve_mod2_affine examples") {
  {
    auto sol = solve_mod2_affine(IntMatrix{{0}}, Bits{0});
    REQUIRE(sol.consistent);
    CHECK(sol.particular == Bits{0});
    REQUIRE(sol.kernel.size() == 1);
    CHECK(sol.kernel[0] == Bits{1});
  }
  {
    auto sol = solve_mod2_affine(IntMatrix{{5}}, Bits{1});
    REQUIRE(sol.consistent);
    CHECK(sol.particular == Bits{1});
    CHECK(sol.kernel.empty());
  }
  {
    IntMatrix b{{2, 1}, {1, 3}};
    auto sol = solve_mod2_affine(b, mod2_diagonal(b));
    REQUIRE(sol.consistent);
    CHECK(sol.kernel.empty());
    // oracle: brute force over the 4 vectors gives the unique solution (1,0)
    auto brute = oracle::mod2_solutions_brute(b, mod2_diagonal(b));
    REQUIRE(brute.size() == 1);
    CHECK(brute[0] == Bits{1, 0});
    CHECK(sol.particular == brute[0]);
  }
  CHECK_THROWS_AS(solve_mod2_affine(IntMatrix{{1}}, Bits{0, 1}), DimensionError);
}

TEST_CASE("solve_mod2_affine solution set matches brute force") {
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    IntMatrix a = random_matrix(rng, 5, 5, 9);
    Bits b(a.rows());
    for (auto& x : b) x = rand_range(rng, 0, 1);
    auto sol = solve_mod2_affine(a, b);
    auto brute = oracle::mod2_solutions_brute(a, b);
    if (!sol.consistent) {
      CHECK(brute.empty());
      continue;
    }
    REQUIRE(!brute.empty());
    std::vector<Bits> mine;
    for (std::size_t m = 0; m < (std::size_t(1) << sol.kernel.size()); ++m) {
      Bits x = sol.particular;
      for (std::size_t i = 0; i < sol.kernel.size(); ++i)
        if (m & (std::size_t(1) << i)) x = xor_bits(x, sol.kernel[i]);
      mine.push_back(x);
    }
    std::sort(mine.begin(), mine.end());
    std::sort(brute.begin(), brute.end());
    CHECK(mine == brute);
  }
}

TEST_CASE("inconsistent mod-2 system is reported") {
  auto sol = solve_mod2_affine(IntMatrix{{2}}, Bits{1});
  CHECK(!sol.consistent);
}

TEST_CASE("unimodular inverse round-trips") {
  Rng rng(19);
  for (int t = 0; t < 20; ++t) {
    IntMatrix u = random_unimodular(rng, rand_range(rng, 1, 5), 8);
    CHECK(u * unimodular_inverse(u) == IntMatrix::identity(u.rows()));
  }
}
