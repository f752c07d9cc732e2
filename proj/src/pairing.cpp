#include "clasperkit/pairing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "clasperkit/errors.hpp"
#include "clasperkit/rat_matrix.hpp"
#include "clasperkit/snf.hpp"

namespace clasperkit {

Int TorsionPairing::group_order() const {
  Int n = 1;
  for (const Int& o : orders) n *= o;
  return n;
}

FiniteAbelianGroup TorsionPairing::group() const {
  FiniteAbelianGroup g;
  if (!orders.empty()) g.invariant_factors = invariant_factors_from_orders(orders);
  return g;
}

bool TorsionPairing::bilinear_ok() const {
  const std::size_t k = size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (at(i, j) != at(j, i)) return false;
      if (!at(i, j).times(orders[i]).is_zero()) return false;
    }
  return true;
}

bool TorsionPairing::nondegenerate() const {
  if (!bilinear_ok())
    throw ValidationError("pairing is not symmetric bilinear over the orders");
  const std::size_t k = size();
  if (k == 0) return true;
  // adjoint injective  <=>  SNF of [N | diag(o)] is all ones,
  // where N(j,i) = o_j * lambda(g_i, g_j)
  IntMatrix m(k, 2 * k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      Rat x = at(i, j).v * Rat(orders[j]);
      m(j, i) = numerator(x);  // integral by bilinearity
    }
    m(j, k + j) = orders[j];
  }
  for (const Int& d : smith_normal_form(m).diagonal())
    if (d != 1) return false;
  return true;
}

std::string TorsionPairing::to_string() const {
  std::ostringstream os;
  const std::size_t k = size();
  if (k == 1) return "[" + at(0, 0).to_string_balanced() + "]";
  os << '[';
  for (std::size_t i = 0; i < k; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < k; ++j) {
      if (j) os << ',';
      os << at(i, j).to_string_balanced();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

TorsionPairing diagonal_pairing(const std::vector<QmodZ>& diag) {
  TorsionPairing t;
  for (const QmodZ& v : diag) {
    if (v.is_zero())
      throw ValidationError("diagonal pairing value must be nonzero mod 1");
    t.orders.push_back(v.order());
  }
  t.values.assign(diag.size() * diag.size(), QmodZ());
  for (std::size_t i = 0; i < diag.size(); ++i) t.at(i, i) = diag[i];
  return t;
}

FiniteAbelianGroup h1(const SurgeryPresentation& p) {
  SnfResult snf = smith_normal_form(p.linking_matrix());
  FiniteAbelianGroup g;
  for (const Int& d : snf.diagonal()) {
    if (d == 0)
      ++g.free_rank;
    else if (d > 1)
      g.invariant_factors.push_back(d);
  }
  return g;
}

TorsionPairing torsion_pairing(const SurgeryPresentation& p) {
  const IntMatrix b = p.linking_matrix();
  SnfResult snf = smith_normal_form(b);
  IntMatrix uinv = unimodular_inverse(snf.u);

  // cokernel generators are the columns of U^{-1}; the column z_i of V is an
  // exact lift with B z_i = d_i g_i, so lambda(g_i, g_j) = -(z_i . g_j)/d_i.
  std::vector<std::size_t> idx;
  std::vector<Int> diag = snf.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (diag[i] > 1) idx.push_back(i);

  TorsionPairing t;
  for (std::size_t i : idx) t.orders.push_back(diag[i]);
  const std::size_t k = idx.size();
  t.values.assign(k * k, QmodZ());
  const std::size_t n = b.rows();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = 0; c < k; ++c) {
      Int dot = 0;
      for (std::size_t r = 0; r < n; ++r)
        dot += snf.v(r, idx[a]) * uinv(r, idx[c]);
      t.at(a, c) = QmodZ(Rat(-dot, diag[idx[a]]));
    }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = a + 1; c < k; ++c)
      if (t.at(a, c) != t.at(c, a))
        throw Error("internal: torsion pairing came out asymmetric");
  return t;
}

namespace {

std::map<Int, int> factorize(Int n) {
  std::map<Int, int> f;
  for (Int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

int valuation(Int n, const Int& p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Int pow_int(const Int& p, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// Restriction to the p-primary component: generators (o_i/p^{v_i}) g_i.
TorsionPairing primary_part(const TorsionPairing& t, const Int& p) {
  std::vector<std::size_t> idx;
  std::vector<Int> mult;
  for (std::size_t i = 0; i < t.size(); ++i) {
    int v = valuation(t.orders[i], p);
    if (v > 0) {
      idx.push_back(i);
      mult.push_back(t.orders[i] / pow_int(p, v));
    }
  }
  TorsionPairing s;
  for (std::size_t a = 0; a < idx.size(); ++a)
    s.orders.push_back(pow_int(p, valuation(t.orders[idx[a]], p)));
  s.values.assign(idx.size() * idx.size(), QmodZ());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t c = 0; c < idx.size(); ++c)
      s.at(a, c) = t.at(idx[a], idx[c]).times(mult[a]).times(mult[c]);
  return s;
}

Int inverse_mod(const Int& a, const Int& m) {
  Int old_r = mod_floor(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error("internal: not invertible mod m");
  return mod_floor(old_s, m);
}

// Homogeneous invariants of a nondegenerate pairing on a p-group, p odd:
// level -> (rank, Legendre class of the block discriminant).
//
// Diagonalize the Gram matrix over Z/p^K by symmetric elimination: pivot on a
// minimum-valuation diagonal entry, folding a row in first when the minimum
// sits off-diagonal (2 is a unit, so the fold preserves the valuation).
std::map<int, std::pair<int, int>> odd_primary_invariants(
    const TorsionPairing& t, const Int& p) {
  const std::size_t k = t.size();
  std::map<int, std::pair<int, Int>> acc;  // level -> (rank, unit product)
  if (k > 0) {
    int kmax = 0;
    for (const Int& o : t.orders) kmax = std::max(kmax, valuation(o, p));
    const Int big = pow_int(p, kmax);

    std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Rat x = t.at(i, j).v * Rat(big);
        a[i][j] = mod_floor(numerator(x) / denominator(x), big);
      }

    std::vector<std::size_t> live(k);
    for (std::size_t i = 0; i < k; ++i) live[i] = i;
    auto val = [&](const Int& x) { return x == 0 ? kmax : valuation(x, p); };

    while (!live.empty()) {
      int best = kmax + 1;
      std::size_t bi = 0, bj = 0;
      for (std::size_t ti = 0; ti < live.size(); ++ti)
        for (std::size_t tj = ti; tj < live.size(); ++tj) {
          const Int& x = a[live[ti]][live[tj]];
          if (x == 0) continue;
          int v = val(x);
          bool diag_beats = (v == best && ti == tj && bi != bj);
          if (v < best || diag_beats) {
            best = v;
            bi = ti;
            bj = tj;
          }
        }
      if (best > kmax)
        throw DegeneratePairingError("p-primary block is degenerate");
      if (bi != bj) {
        // fold row/col j into i; the 2*a_ij cross term keeps the valuation
        std::size_t i = live[bi], j = live[bj];
        for (std::size_t tc = 0; tc < live.size(); ++tc) {
          std::size_t c = live[tc];
          a[i][c] = mod_floor(a[i][c] + a[j][c], big);
        }
        for (std::size_t tc = 0; tc < live.size(); ++tc) {
          std::size_t c = live[tc];
          a[c][i] = mod_floor(a[c][i] + a[c][j], big);
        }
      } else {
        std::size_t piv = live[bi];
        const int e = best;
        const Int pe = pow_int(p, e);
        const Int u = mod_floor(a[piv][piv] / pe, big);  // unit mod p
        const int level = kmax - e;                       // generator order p^level
        auto& slot = acc.emplace(level, std::make_pair(0, Int(1))).first->second;
        slot.first += 1;
        slot.second = mod_floor(slot.second * u, p);

        const Int uinv = inverse_mod(u, big);
        live.erase(live.begin() + bi);
        std::vector<Int> c(k);
        for (std::size_t ti = 0; ti < live.size(); ++ti)
          c[live[ti]] = a[live[ti]][piv] / pe;  // exact: pivot has min valuation
        for (std::size_t ti = 0; ti < live.size(); ++ti)
          for (std::size_t tj = ti; tj < live.size(); ++tj) {
            std::size_t i2 = live[ti], j2 = live[tj];
            Int v2 = mod_floor(a[i2][j2] - c[i2] * c[j2] * pe % big * uinv, big);
            a[i2][j2] = v2;
            a[j2][i2] = v2;
          }
        continue;
      }
    }
  }
  std::map<int, std::pair<int, int>> out;
  for (const auto& [level, ru] : acc) {
    Int ls = boost::multiprecision::powm(ru.second, (p - 1) / 2, p);
    out[level] = {ru.first, ls == 1 ? 1 : -1};
  }
  return out;
}

// All elements of prod Z/o_i as coefficient tuples.
std::vector<std::vector<Int>> all_elements(const std::vector<Int>& orders) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(orders.size(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < orders.size()) {
      cur[i] += 1;
      if (cur[i] < orders[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == orders.size()) break;
    if (orders.empty()) break;
  }
  return out;
}

Int element_order(const std::vector<Int>& x, const std::vector<Int>& orders) {
  Int ord = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Int oi = orders[i] / gcd(orders[i], x[i]);
    ord = lcm(ord, oi);
  }
  return ord;
}

QmodZ eval_pairing(const TorsionPairing& t, const std::vector<Int>& x,
                   const std::vector<Int>& y) {
  Rat acc = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < t.size(); ++j)
      if (y[j] != 0) acc += Rat(x[i] * y[j]) * t.at(i, j).v;
  }
  return QmodZ(acc);
}

struct BruteForceSearch {
  const TorsionPairing& a;
  const TorsionPairing& b;
  std::vector<std::vector<Int>> elems;  // elements of G_b
  std::vector<Int> elem_order;
  std::vector<std::vector<Int>> images;

  bool spans() const {
    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> frontier;
    std::vector<Int> zero(b.orders.size(), 0);
    seen.insert(zero);
    frontier.push_back(zero);
    while (!frontier.empty()) {
      auto x = frontier.back();
      frontier.pop_back();
      for (const auto& g : images) {
        std::vector<Int> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
          y[i] = mod_floor(x[i] + g[i], b.orders[i]);
        if (seen.insert(y).second) frontier.push_back(y);
      }
    }
    return Int(seen.size()) == b.group_order();
  }

  bool dfs(std::size_t level) {
    if (level == a.size()) return spans();
    for (std::size_t e = 0; e < elems.size(); ++e) {
      if (elem_order[e] != a.orders[level]) continue;
      if (eval_pairing(b, elems[e], elems[e]) != a.at(level, level)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < level && ok; ++j)
        ok = eval_pairing(b, elems[e], images[j]) == a.at(level, j);
      if (!ok) continue;
      images.push_back(elems[e]);
      if (dfs(level + 1)) return true;
      images.pop_back();
    }
    return false;
  }
};

}  // namespace

bool pairing_brute_force_isomorphic(const TorsionPairing& a,
                                    const TorsionPairing& b,
                                    const Int& size_cap) {
  if (a.group_order() > size_cap || b.group_order() > size_cap)
    throw SizeCapError("pairing brute force capped at group order " +
                       size_cap.str());
  if (a.group() != b.group()) return false;
  if (a.size() == 0) return true;
  BruteForceSearch s{a, b, all_elements(b.orders), {}, {}};
  s.elem_order.reserve(s.elems.size());
  for (const auto& e : s.elems)
    s.elem_order.push_back(element_order(e, b.orders));
  return s.dfs(0);
}

Ternary pairing_isomorphic(const TorsionPairing& a, const TorsionPairing& b,
                           const Int& two_torsion_cap) {
  if (!a.nondegenerate() || !b.nondegenerate())
    throw DegeneratePairingError("pairing_isomorphic needs nondegenerate input");
  if (a.group() != b.group()) return Ternary::No;

  std::map<Int, int> primes = factorize(a.group_order());
  bool undecided = false;
  for (const auto& [p, e] : primes) {
    (void)e;
    TorsionPairing pa = primary_part(a, p);
    TorsionPairing pb = primary_part(b, p);
    if (p == 2) {
      if (pa.group_order() > two_torsion_cap) {
        undecided = true;
        continue;
      }
      if (!pairing_brute_force_isomorphic(pa, pb, two_torsion_cap))
        return Ternary::No;
    } else {
      if (odd_primary_invariants(pa, p) != odd_primary_invariants(pb, p))
        return Ternary::No;
    }
  }
  return undecided ? Ternary::Undecided : Ternary::Yes;
}

std::string pairing_normal_form_summary(const TorsionPairing& t) {
  if (t.size() == 0) return "trivial";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factorize(t.group_order())) {
    (void)e;
    if (!first) os << "; ";
    first = false;
    os << "p=" << p << ":";
    TorsionPairing pp = primary_part(t, p);
    if (p == 2) {
      os << " orders [";
      for (std::size_t i = 0; i < pp.orders.size(); ++i)
        os << (i ? "," : "") << pp.orders[i];
      os << "] (2-part, compared by capped brute force)";
    } else {
      for (const auto& [level, rd] : odd_primary_invariants(pp, p))
        os << " " << p << "^" << level << "(rank " << rd.first << ", disc "
           << (rd.second > 0 ? "QR" : "NR") << ")";
    }
  }
  return os.str();
}

}  // namespace clasperkit
