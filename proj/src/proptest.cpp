#include "clasperkit/proptest.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "clasperkit/decide.hpp"
#include "clasperkit/errors.hpp"
#include "clasperkit/manifest.hpp"
#include "clasperkit/mod2.hpp"
#include "clasperkit/pairing.hpp"
#include "clasperkit/rat_matrix.hpp"
#include "clasperkit/seifert.hpp"
#include "clasperkit/signature.hpp"
#include "clasperkit/snf.hpp"
#include "clasperkit/spin.hpp"

namespace clasperkit {

long long rand_range(Rng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

IntMatrix random_matrix(Rng& rng, std::size_t max_rows, std::size_t max_cols,
                        long long max_abs) {
  std::size_t m = rand_range(rng, 0, max_rows);
  std::size_t n = rand_range(rng, 0, max_cols);
  IntMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = rand_range(rng, -max_abs, max_abs);
  return a;
}

IntMatrix random_symmetric(Rng& rng, std::size_t n, long long max_abs) {
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      a(i, j) = rand_range(rng, -max_abs, max_abs);
      a(j, i) = a(i, j);
    }
  return a;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, int ops) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (int t = 0; t < ops; ++t) {
    std::size_t i = rand_range(rng, 0, n - 1);
    std::size_t j = rand_range(rng, 0, n - 1);
    if (i == j) continue;
    switch (rand_range(rng, 0, 2)) {
      case 0: {  // transvection
        Int f = rand_range(rng, -2, 2);
        for (std::size_t c = 0; c < n; ++c) u(i, c) += f * u(j, c);
        break;
      }
      case 1:  // swap
        for (std::size_t c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
        break;
      default:  // negate
        for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
    }
  }
  return u;
}

namespace {

std::size_t cycle_count(int n, const std::vector<int>& word) {
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 1);
  for (int letter : word) {
    int k = std::abs(letter);
    std::swap(pos[k - 1], pos[k]);
  }
  std::vector<int> perm(n);
  for (int p = 1; p <= n; ++p) perm[pos[p - 1] - 1] = p;
  std::vector<bool> seen(n, false);
  std::size_t cycles = 0;
  for (int s = 1; s <= n; ++s) {
    if (seen[s - 1]) continue;
    ++cycles;
    int t = s;
    while (!seen[t - 1]) {
      seen[t - 1] = true;
      t = perm[t - 1];
    }
  }
  return cycles;
}

}  // namespace

FramedBraidLink random_link(Rng& rng, int max_strands, int max_word,
                            long long max_framing) {
  int n = static_cast<int>(rand_range(rng, 1, max_strands));
  int len = n == 1 ? 0 : static_cast<int>(rand_range(rng, 0, max_word));
  std::vector<int> word;
  for (int t = 0; t < len; ++t) {
    int k = static_cast<int>(rand_range(rng, 1, n - 1));
    word.push_back(rand_range(rng, 0, 1) ? k : -k);
  }
  std::size_t m = cycle_count(n, word);
  std::vector<Int> framings;
  for (std::size_t i = 0; i < m; ++i)
    framings.emplace_back(rand_range(rng, -max_framing, max_framing));
  return FramedBraidLink(n, std::move(word), std::move(framings));
}

FramedBraidLink random_knot(Rng& rng, int max_strands, int max_word) {
  for (;;) {
    FramedBraidLink l = random_link(rng, max_strands, max_word, 3);
    if (l.component_count() == 1) return l;
  }
}

SurgeryPresentation random_diagram_presentation(Rng& rng, int max_strands,
                                                int max_word,
                                                std::size_t max_nullity) {
  for (;;) {
    FramedBraidLink l = random_link(rng, max_strands, max_word, 4);
    if (mod2_nullity(l.linking_matrix()) <= max_nullity)
      return SurgeryPresentation::diagram(std::move(l));
  }
}

ClasperSpec random_clasper_spec(Rng& rng, const FramedBraidLink& link) {
  const int n = link.is_empty() ? 0 : link.strands();
  ClasperSpec spec;
  spec.site = static_cast<std::size_t>(rand_range(rng, 0, link.word().size()));

  // carve up to three disjoint ranges out of 1..n
  std::vector<std::pair<int, int>> ranges;
  int cursor = 1;
  for (int i = 0; i < 3 && cursor <= n; ++i) {
    if (rand_range(rng, 0, 2) == 0) continue;  // leave this leaf empty
    int lo = static_cast<int>(rand_range(rng, cursor, n));
    int hi = static_cast<int>(rand_range(rng, lo, std::min(n, lo + 2)));
    ranges.emplace_back(lo, hi);
    cursor = hi + 1;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    Int f = rand_range(rng, -3, 3);
    if (i < ranges.size())
      spec.leaves[i] = LeafSpec::range(ranges[i].first, ranges[i].second, f);
    else
      spec.leaves[i] = LeafSpec{true, 0, 0, f};
  }
  return spec;
}

std::vector<int> random_braid_rewrite(Rng& rng, const std::vector<int>& word) {
  struct Rewrite {
    std::size_t at;
    bool yang_baxter;
  };
  std::vector<Rewrite> options;
  for (std::size_t t = 0; t + 1 < word.size(); ++t) {
    if (std::abs(std::abs(word[t]) - std::abs(word[t + 1])) >= 2)
      options.push_back({t, false});
    if (t + 2 < word.size()) {
      int a = word[t], b = word[t + 1], c = word[t + 2];
      bool same_sign = (a > 0) == (b > 0) && (b > 0) == (c > 0);
      if (same_sign && a == c && std::abs(std::abs(a) - std::abs(b)) == 1)
        options.push_back({t, true});
    }
  }
  if (options.empty()) return word;
  Rewrite r = options[rand_range(rng, 0, options.size() - 1)];
  std::vector<int> out = word;
  if (r.yang_baxter) {
    // (a, b, a) -> (b, a, b)
    out[r.at] = word[r.at + 1];
    out[r.at + 1] = word[r.at];
    out[r.at + 2] = word[r.at + 1];
  } else {
    std::swap(out[r.at], out[r.at + 1]);
  }
  return out;
}

namespace {

struct Checker {
  PropertyResult result;
  explicit Checker(std::string name) { result.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result.cases;
    if (!ok) {
      ++result.failures;
      if (result.first_failure.empty()) result.first_failure = what;
    }
  }
};

}  // namespace

PropertyResult prop_snf_invariants(Rng& rng, int cases) {
  Checker c("snf: UAV=D, unimodular, divisibility");
  for (int t = 0; t < cases; ++t) {
    IntMatrix a = random_matrix(rng, 8, 8, 99);
    SnfResult r = smith_normal_form(a);
    bool ok = r.u * a * r.v == r.d;
    Int du = r.u.determinant(), dv = r.v.determinant();
    ok = ok && (du == 1 || du == -1) && (dv == 1 || dv == -1);
    auto diag = r.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
      ok = ok && diag[i] >= 0;
      if (i + 1 < diag.size() && diag[i + 1] != 0)
        ok = ok && diag[i] != 0 && diag[i + 1] % diag[i] == 0;
      if (i + 1 < diag.size() && diag[i] == 0) ok = ok && diag[i + 1] == 0;
    }
    for (std::size_t i = 0; i < r.d.rows(); ++i)
      for (std::size_t j = 0; j < r.d.cols(); ++j)
        if (i != j) ok = ok && r.d(i, j) == 0;
    c.check(ok, "snf failed on " + a.to_string());
  }
  return c.result;
}

PropertyResult prop_signature_symmetries(Rng& rng, int cases) {
  Checker c("signature: sig(-S)=-sig(S), block additivity");
  for (int t = 0; t < cases; ++t) {
    IntMatrix s1 = random_symmetric(rng, rand_range(rng, 0, 5), 9);
    IntMatrix s2 = random_symmetric(rng, rand_range(rng, 0, 5), 9);
    bool ok = signature(-s1) == -signature(s1);
    ok = ok && signature(block_diag(s1, s2)) == signature(s1) + signature(s2);
    c.check(ok, "signature symmetry failed on " + s1.to_string());
  }
  return c.result;
}

PropertyResult prop_characteristic_solvable(Rng& rng, int cases) {
  Checker c("mod2: characteristic system always solvable");
  for (int t = 0; t < cases; ++t) {
    IntMatrix b = random_symmetric(rng, rand_range(rng, 0, 8), 99);
    auto sol = solve_mod2_affine(b, mod2_diagonal(b));
    c.check(sol.consistent, "inconsistent characteristic system for " + b.to_string());
  }
  return c.result;
}

PropertyResult prop_linking_braid_relations(Rng& rng, int cases) {
  Checker c("braid: linking matrix invariant under braid relations");
  for (int t = 0; t < cases; ++t) {
    FramedBraidLink l = random_link(rng, 5, 10, 5);
    IntMatrix b = l.linking_matrix();
    std::vector<int> w = l.word();
    for (int r = 0; r < 4; ++r) w = random_braid_rewrite(rng, w);
    FramedBraidLink l2(l.strands(), w, l.framings());
    c.check(l2.linking_matrix() == b && l2.components() == l.components(),
            "braid relation changed linking of " + l.to_string());
  }
  return c.result;
}

PropertyResult prop_arf_det_criterion(Rng& rng, int cases) {
  Checker c("arf: Arf=0 iff det = +-1 mod 8 on knots");
  for (int t = 0; t < cases; ++t) {
    FramedBraidLink k = random_knot(rng, 4, 12);
    auto a = arf(k);
    if (!a) {
      c.check(false, "arf undefined on knot " + k.to_string());
      continue;
    }
    Int det = abs(alexander_at_minus_one(seifert_matrix(connect_bennequin(k))));
    Int r = det % 8;
    bool det_trivial = (r == 1 || r == 7);
    c.check((*a == 0) == det_trivial,
            "arf/det mismatch on " + k.to_string() + ", det " + det.str());
  }
  return c.result;
}

PropertyResult prop_markov_invariance(Rng& rng, int cases) {
  Checker c("braid: Markov stabilization preserves linking and arf");
  for (int t = 0; t < cases; ++t) {
    FramedBraidLink l = random_link(rng, 4, 8, 4);
    int sign = rand_range(rng, 0, 1) ? 1 : -1;
    FramedBraidLink s = markov_stabilize(l, sign);
    bool ok = s.component_count() == l.component_count();
    ok = ok && s.linking_matrix() == l.linking_matrix();
    ok = ok && arf(s) == arf(l);
    c.check(ok, "markov stabilization changed invariants of " + l.to_string());
  }
  return c.result;
}

PropertyResult prop_spin_count(Rng& rng, int cases) {
  Checker c("spin: count = 2^nullity");
  for (int t = 0; t < cases; ++t) {
    IntMatrix b = random_symmetric(rng, rand_range(rng, 0, 8), 99);
    std::size_t nullity = mod2_nullity(b);
    if (nullity > 12) {
      c.check(true, "");
      continue;
    }
    auto spins = spin_structures(SurgeryPresentation::matrix_only(b));
    c.check(spins.size() == (std::size_t(1) << nullity),
            "spin count mismatch for " + b.to_string());
  }
  return c.result;
}

PropertyResult prop_characteristic_proper(Rng& rng, int cases) {
  Checker c("spin: characteristic sublinks are proper (Arf defined)");
  for (int t = 0; t < cases; ++t) {
    SurgeryPresentation p = random_diagram_presentation(rng, 5, 10, 3);
    for (const CharSublink& s : spin_structures(p)) {
      std::vector<int> mask;
      for (std::size_t i = 0; i < s.bits.size(); ++i)
        if (s.bits[i]) mask.push_back(static_cast<int>(i));
      c.check(arf(p.link(), mask).has_value(),
              "arf undefined on characteristic sublink of " + p.to_string());
    }
  }
  return c.result;
}

PropertyResult prop_twist_invariance(Rng& rng, int cases) {
  Checker c("spin: rochlin mod 8 invariant under orientable twisting");
  for (int t = 0; t < cases; ++t) {
    SurgeryPresentation p = random_diagram_presentation(rng, 5, 8, 3);
    IntMatrix b = p.linking_matrix();
    // kappa must come from a closed orientable surface class: draw it from
    // the mod-2 image of the integer kernel, not all of ker(B mod 2)
    auto basis = orientable_twist_basis(p);
    auto spins = spin_structures(p);
    const CharSublink& chr = spins[rand_range(rng, 0, spins.size() - 1)];
    SpinPresentation s(p, chr);
    Bits kappa(b.rows(), 0);
    for (const Bits& k : basis)
      if (rand_range(rng, 0, 1)) kappa = xor_bits(kappa, k);
    SpinPresentation s2 = twist(s, kappa);
    c.check((rochlin(s) - rochlin(s2)) % 8 == 0,
            "twist changed rochlin mod 8 on " + p.to_string());
  }
  return c.result;
}

PropertyResult prop_blowup_exact(Rng& rng, int cases) {
  Checker c("spin: split +-1 blow-up preserves rochlin mod 16 exactly");
  for (int t = 0; t < cases; ++t) {
    SurgeryPresentation p = random_diagram_presentation(rng, 4, 8, 3);
    auto spins = spin_structures(p);
    const CharSublink& chr = spins[rand_range(rng, 0, spins.size() - 1)];
    int sign = rand_range(rng, 0, 1) ? 1 : -1;

    const FramedBraidLink& l = p.link();
    int n = l.is_empty() ? 0 : l.strands();
    std::vector<Int> framings = l.is_empty() ? std::vector<Int>{} : l.framings();
    // the new strand is split, so it lands at the end of the component list
    framings.emplace_back(sign);
    FramedBraidLink blown(n + 1, l.word(), framings);
    Bits c2 = chr.bits;
    c2.push_back(1);
    SpinPresentation s(p, chr);
    SpinPresentation s2(SurgeryPresentation::diagram(blown), CharSublink{c2});
    c.check(rochlin(s) == rochlin(s2),
            "blow-up shifted rochlin on " + p.to_string());
  }
  return c.result;
}

PropertyResult prop_clasper_structural(Rng& rng, int cases) {
  Checker c("clasper: spliced linking matrix equals predicted block matrix");
  for (int t = 0; t < cases; ++t) {
    SurgeryPresentation p = random_diagram_presentation(rng, 4, 6, 3);
    ClasperSpec spec = random_clasper_spec(rng, p.link());
    try {
      ClasperSurgeryResult r = insert_clasper(p, spec);
      IntMatrix predicted =
          predicted_block_matrix(p.linking_matrix(), spec, r.leaf_linking);
      c.check(r.presentation.linking_matrix() == predicted,
              "structural mismatch for " + spec.format());
    } catch (const Error& e) {
      c.check(false, std::string("insert_clasper threw: ") + e.what());
    }
  }
  return c.result;
}

PropertyResult prop_matveev_invariance(Rng& rng, int cases) {
  Checker c("clasper: h1 and pairing class preserved (Matveev)");
  for (int t = 0; t < cases; ++t) {
    SurgeryPresentation p = random_diagram_presentation(rng, 4, 6, 3);
    ClasperSpec spec = random_clasper_spec(rng, p.link());
    SurgeryPresentation q = insert_clasper(p, spec).presentation;
    bool ok = h1(p) == h1(q);
    ok = ok && pairing_isomorphic(torsion_pairing(p), torsion_pairing(q)) ==
                   Ternary::Yes;
    c.check(ok, "clasper surgery changed h1/pairing for " + spec.format());
  }
  return c.result;
}

PropertyResult prop_massuyeau_invariance(Rng& rng, int cases) {
  Checker c("clasper: rochlin mod 8 preserved on every spin (Massuyeau)");
  if (cases > 0) {
    // fixed anchor sensitive to the core geometry (the mod-8 congruence is
    // blind to the 8*Arf term): the empty-leaf clasper with framings (1,1,1)
    // on S^3 blows down to (-1,-1,-1)-framed Borromean rings, so the unique
    // spin must have R = 8. A template with a broken core yields S^3, R = 0.
    ClasperSpec anchor;
    for (int i = 0; i < 3; ++i) anchor.leaves[i] = LeafSpec{true, 0, 0, 1};
    ClasperSurgeryResult r = insert_clasper(
        SurgeryPresentation::diagram(FramedBraidLink::empty_link()), anchor);
    CharSublink chr = corresponding_spin(CharSublink{{}}, r);
    c.check(rochlin(SpinPresentation(r.presentation, chr)) == 8,
            "core anchor: (1,1,1)-framed trivial-leaf clasper on S^3 must "
            "have rochlin 8");
  }
  for (int t = 0; t < cases; ++t) {
    SurgeryPresentation p = random_diagram_presentation(rng, 4, 6, 3);
    ClasperSpec spec = random_clasper_spec(rng, p.link());
    if (t % 8 == 0) spec = ClasperSpec{};  // guaranteed trivial cases
    ClasperSurgeryResult r = insert_clasper(p, spec);
    bool trivial = spec.leaves[0].empty && spec.leaves[1].empty &&
                   spec.leaves[2].empty && spec.leaves[0].framing == 0 &&
                   spec.leaves[1].framing == 0 && spec.leaves[2].framing == 0;
    for (const CharSublink& chr : spin_structures(p)) {
      SpinPresentation before(p, chr);
      SpinPresentation after(r.presentation, corresponding_spin(chr, r));
      int rb = rochlin(before), ra = rochlin(after);
      c.check((rb - ra) % 8 == 0, "rochlin mod 8 broke for " + spec.format() +
                                      " on " + p.to_string());
      if (trivial)
        c.check(rb == ra, "trivial clasper shifted rochlin mod 16 for " +
                              spec.format());
    }
  }
  return c.result;
}

PropertyResult prop_pairing_vs_brute_force(Rng& rng, int cases) {
  Checker c("pairing: decision procedure agrees with brute force");
  int done = 0;
  while (done < cases) {
    IntMatrix b1 = random_symmetric(rng, rand_range(rng, 1, 3), 6);
    IntMatrix b2 = random_symmetric(rng, rand_range(rng, 1, 3), 6);
    Int d1 = abs(b1.determinant()), d2 = abs(b2.determinant());
    if (d1 == 0 || d2 == 0 || d1 > 200 || d2 > 200) continue;
    if (is_even(d1) || is_even(d2)) continue;
    TorsionPairing t1 = torsion_pairing(SurgeryPresentation::matrix_only(b1));
    TorsionPairing t2 = torsion_pairing(SurgeryPresentation::matrix_only(b2));
    Ternary fast = pairing_isomorphic(t1, t2);
    bool slow = pairing_brute_force_isomorphic(t1, t2);
    c.check(fast == (slow ? Ternary::Yes : Ternary::No),
            "decision mismatch on " + b1.to_string() + " vs " + b2.to_string());
    ++done;
  }
  return c.result;
}

PropertyResult prop_presentation_moves(Rng& rng, int cases) {
  Checker c("pairing: congruence and stabilization preserve h1/pairing");
  for (int t = 0; t < cases; ++t) {
    std::size_t n = rand_range(rng, 1, 5);
    IntMatrix b = random_symmetric(rng, n, 6);
    IntMatrix u = random_unimodular(rng, n, 6);
    IntMatrix bu = u.transpose() * b * u;
    SurgeryPresentation p = SurgeryPresentation::matrix_only(b);
    SurgeryPresentation pu = SurgeryPresentation::matrix_only(bu);
    bool ok = h1(p) == h1(pu);
    Int two_part = 1;  // keep the 2-primary part inside the decision cap
    Int torsion = h1(p).torsion_order();
    while (is_even(torsion)) {
      torsion /= 2;
      two_part *= 2;
    }
    if (two_part <= 256)
      ok = ok && pairing_isomorphic(torsion_pairing(p), torsion_pairing(pu)) ==
                     Ternary::Yes;
    IntMatrix stab(1, 1);
    stab(0, 0) = rand_range(rng, 0, 1) ? 1 : -1;
    SurgeryPresentation ps = SurgeryPresentation::matrix_only(block_diag(b, stab));
    ok = ok && h1(p) == h1(ps);
    if (two_part <= 256)
      ok = ok && pairing_isomorphic(torsion_pairing(p), torsion_pairing(ps)) ==
                     Ternary::Yes;
    c.check(ok, "presentation move changed invariants of " + b.to_string());
  }
  return c.result;
}

PropertyResult prop_no_2torsion_consistency(Rng& rng, int cases) {
  Checker c("decide: Y-equivalent odd-torsion pairs have congruent rochlin");
  int done = 0;
  std::vector<SurgeryPresentation> pool;
  auto unique_rochlin = [](const SurgeryPresentation& p) {
    auto spins = spin_structures(p);
    return rochlin(SpinPresentation(p, spins.at(0)));
  };
  while (done < cases) {
    SurgeryPresentation p = random_diagram_presentation(rng, 4, 6, 0);
    if (is_even(p.linking_matrix().determinant())) continue;  // want odd torsion

    // derived partner: claspers, blow-ups, stabilizations, braid shuffles
    SurgeryPresentation q = p;
    int moves = rand_range(rng, 1, 3);
    for (int mv = 0; mv < moves; ++mv) {
      switch (rand_range(rng, 0, 2)) {
        case 0:
          q = insert_clasper(q, random_clasper_spec(rng, q.link())).presentation;
          break;
        case 1: {
          const FramedBraidLink& l = q.link();
          std::vector<Int> f = l.framings();
          f.emplace_back(rand_range(rng, 0, 1) ? 1 : -1);
          q = SurgeryPresentation::diagram(
              FramedBraidLink(l.strands() + 1, l.word(), f));
          break;
        }
        default:
          q = SurgeryPresentation::diagram(
              markov_stabilize(q.link(), rand_range(rng, 0, 1) ? 1 : -1));
      }
    }
    if (!y_equivalent(p, q).yes()) {
      c.check(false, "derived pair not Y-equivalent: " + p.to_string());
      ++done;
      continue;
    }
    c.check((unique_rochlin(p) - unique_rochlin(q)) % 8 == 0,
            "rochlin mod 8 differs on Y-equivalent pair " + p.to_string());
    ++done;

    // mine the pool for independently generated Yes pairs
    for (const SurgeryPresentation& other : pool) {
      if (done >= cases) break;
      if (!y_equivalent(p, other).yes()) continue;
      c.check((unique_rochlin(p) - unique_rochlin(other)) % 8 == 0,
              "rochlin mod 8 differs on pool pair " + p.to_string() + " / " +
                  other.to_string());
      ++done;
    }
    pool.push_back(p);
    if (pool.size() > 40) pool.erase(pool.begin());
  }
  return c.result;
}

PropertyResult prop_manifest_roundtrip(Rng& rng, int cases) {
  Checker c("manifest: parse(print(m)) == m");
  for (int t = 0; t < cases; ++t) {
    ManifoldManifest m;
    m.label = "case" + std::to_string(t);
    if (rand_range(rng, 0, 1)) {
      FramedBraidLink l = random_link(rng, 5, 8, 9);
      m.strands = l.strands();
      m.word = l.word();
      m.framings = l.framings();
      if (rand_range(rng, 0, 1)) {
        auto spins = spin_structures(SurgeryPresentation::diagram(l), 12);
        m.spin = spins[rand_range(rng, 0, spins.size() - 1)].bits;
      }
    } else {
      m.matrix = random_symmetric(rng, rand_range(rng, 0, 4), 99);
      if (rand_range(rng, 0, 1)) m.notes = "randomized roundtrip case";
    }
    ManifoldManifest back = parse_manifest(print_manifest(m));
    c.check(back == m, "manifest roundtrip failed for " + m.label);
  }
  return c.result;
}

std::vector<PropertyResult> run_property_suites(std::uint64_t seed, int count) {
  std::vector<PropertyResult> out;
  auto run = [&](PropertyResult (*prop)(Rng&, int), double scale) {
    Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (out.size() + 1)));
    int cases = std::max(0, static_cast<int>(count * scale));
    out.push_back(prop(rng, cases));
  };
  run(prop_snf_invariants, 1.0);
  run(prop_signature_symmetries, 1.0);
  run(prop_characteristic_solvable, 1.0);
  run(prop_linking_braid_relations, 1.0);
  run(prop_arf_det_criterion, 1.0);
  run(prop_markov_invariance, 1.0);
  run(prop_spin_count, 1.0);
  run(prop_characteristic_proper, 0.5);
  run(prop_twist_invariance, 1.0);
  run(prop_blowup_exact, 0.5);
  run(prop_clasper_structural, 0.5);
  run(prop_matveev_invariance, 0.5);
  run(prop_massuyeau_invariance, 0.5);
  run(prop_pairing_vs_brute_force, 0.5);
  run(prop_presentation_moves, 1.0);
  run(prop_no_2torsion_consistency, 0.5);
  run(prop_manifest_roundtrip, 1.0);
  return out;
}

std::string format_property_table(const std::vector<PropertyResult>& results) {
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.ok() ? "PASS  " : "FAIL  ") << r.name
       << std::string(width - r.name.size() + 2, ' ') << r.cases << " cases";
    if (!r.ok())
      os << ", " << r.failures << " failures; first: " << r.first_failure;
    os << "\n";
  }
  return os.str();
}

}  // namespace clasperkit
