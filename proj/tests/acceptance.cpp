// Acceptance suite: fixed-value anchors plus the randomized invariance
// criteria, one pass/fail line each. Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "clasperkit/clasper.hpp"
#include "clasperkit/decide.hpp"
#include "clasperkit/manifest.hpp"
#include "clasperkit/pairing.hpp"
#include "clasperkit/proptest.hpp"
#include "clasperkit/spin.hpp"

using namespace clasperkit;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
  double time_limit_s = 0;  // 0 = no limit
};

IntMatrix e8_matrix() {
  IntMatrix m(8, 8);
  for (int i = 0; i < 8; ++i) m(i, i) = -2;
  for (int i = 0; i < 6; ++i) {
    m(i, i + 1) = 1;
    m(i + 1, i) = 1;
  }
  m(4, 7) = 1;
  m(7, 4) = 1;
  return m;
}

bool check_property(PropertyResult r, std::string& detail) {
  detail = std::to_string(r.cases) + " cases";
  if (!r.ok())
    detail += ", " + std::to_string(r.failures) +
              " failures; first: " + r.first_failure;
  return r.ok();
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back(
      {"poincare cross-check: trefoil and E8 rochlin both 8 (mod 16)",
       [](std::string& detail) {
         FramedBraidLink tref(2, {-1, -1, -1}, {Int(1)});
         SpinPresentation via_trefoil(SurgeryPresentation::diagram(tref),
                                      CharSublink{{1}});
         auto spins = spin_structures(SurgeryPresentation::matrix_only(e8_matrix()));
         if (spins.size() != 1 || !all_zero(spins[0].bits)) {
           detail = "E8 characteristic enumeration failed";
           return false;
         }
         SpinPresentation via_e8(SurgeryPresentation::matrix_only(e8_matrix()),
                                 spins[0]);
         int rt = rochlin(via_trefoil), re = rochlin(via_e8);
         detail = "trefoil R = " + std::to_string(rt) +
                  ", E8 R = " + std::to_string(re);
         return rt == 8 && re == 8 && rt == re;
       },
       1.0});

  criteria.push_back(
      {"lens-space pairing decision: [[5]] vs [[2,1],[1,3]] No; order-7 Yes",
       [](std::string& detail) {
         Verdict no = y_equivalent(SurgeryPresentation::matrix_only(IntMatrix{{5}}),
                                   SurgeryPresentation::matrix_only(
                                       IntMatrix{{2, 1}, {1, 3}}));
         bool ok = no.outcome == Ternary::No &&
                   no.obstruction == "torsion linking pairing";
         // order-7 pairings with discriminants 1 and 2 (both residues mod 7)
         TorsionPairing d1 = diagonal_pairing({QmodZ(Rat(1, 7))});
         TorsionPairing d2 = diagonal_pairing({QmodZ(Rat(2, 7))});
         ok = ok && pairing_isomorphic(d1, d2) == Ternary::Yes;
         Verdict yes = y_equivalent(
             SurgeryPresentation::matrix_only(IntMatrix{{7}}),
             SurgeryPresentation::matrix_only(IntMatrix{{2, 1}, {1, 4}}));
         ok = ok && yes.outcome == Ternary::Yes;
         detail = "verdicts: " + std::string(ok ? "as expected" : "WRONG");
         return ok;
       },
       1.0});

  criteria.push_back({"Matveev invariance: h1 + pairing preserved, 200 cases",
                      [](std::string& detail) {
                        Rng rng(20240301);
                        return check_property(prop_matveev_invariance(rng, 200),
                                              detail);
                      },
                      120.0});

  criteria.push_back(
      {"Massuyeau invariance: rochlin mod 8 on every spin, 200 cases "
       "(trivial claspers mod 16)",
       [](std::string& detail) {
         Rng rng(20240302);
         return check_property(prop_massuyeau_invariance(rng, 200), detail);
       },
       0});

  criteria.push_back({"spin-twist invariance: rochlin mod 8, 500 cases",
                      [](std::string& detail) {
                        Rng rng(20240303);
                        return check_property(prop_twist_invariance(rng, 500),
                                              detail);
                      },
                      0});

  criteria.push_back(
      {"arf oracle agreement: Arf = 0 iff det = +-1 mod 8, 100 knots",
       [](std::string& detail) {
         Rng rng(20240304);
         return check_property(prop_arf_det_criterion(rng, 100), detail);
       },
       30.0});

  criteria.push_back(
      {"pairing decision vs brute force: odd |det| <= 200, 300 pairs",
       [](std::string& detail) {
         Rng rng(20240305);
         return check_property(prop_pairing_vs_brute_force(rng, 300), detail);
       },
       0});

  criteria.push_back(
      {"presentation-move invariance: congruence + stabilization, 300 cases",
       [](std::string& detail) {
         Rng rng(20240306);
         bool ok = check_property(prop_presentation_moves(rng, 300), detail);
         std::string d2;
         Rng rng2(20240307);
         ok = check_property(prop_blowup_exact(rng2, 100), d2) && ok;
         detail += "; blow-up " + d2;
         return ok;
       },
       0});

  criteria.push_back(
      {"no-2-torsion consistency: Y-equivalent pairs rochlin mod 8, 100 pairs",
       [](std::string& detail) {
         Rng rng(20240308);
         return check_property(prop_no_2torsion_consistency(rng, 100), detail);
       },
       0});

  criteria.push_back({"spin-structure count: 2^nullity on 500 matrices",
                      [](std::string& detail) {
                        Rng rng(20240309);
                        return check_property(prop_spin_count(rng, 500), detail);
                      },
                      0});

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (criteria[i].time_limit_s > 0 && secs > criteria[i].time_limit_s) {
      ok = false;
      detail += " [exceeded " + std::to_string(criteria[i].time_limit_s) +
                "s limit]";
    }
    if (!ok) ++failures;
    std::printf("[%2zu/%zu] %s  %s (%s, %.2fs)\n", i + 1, criteria.size(),
                ok ? "PASS" : "FAIL", criteria[i].name.c_str(), detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("ACCEPTANCE: %zu/%zu criteria passed\n",
              criteria.size() - failures, criteria.size());
  return failures;
}
