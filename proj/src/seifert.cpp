#include "clasperkit/seifert.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>

#include "clasperkit/errors.hpp"

namespace clasperkit {

bool bennequin_connected(const FramedBraidLink& link) {
  if (link.is_empty() || link.strands() == 1) return true;
  std::vector<bool> used(link.strands(), false);
  for (int letter : link.word()) used[std::abs(letter)] = true;
  for (int k = 1; k < link.strands(); ++k)
    if (!used[k]) return false;
  return true;
}

FramedBraidLink connect_bennequin(const FramedBraidLink& link) {
  if (bennequin_connected(link)) return link;
  std::vector<bool> used(link.strands(), false);
  for (int letter : link.word()) used[std::abs(letter)] = true;
  std::vector<int> word = link.word();
  for (int k = 1; k < link.strands(); ++k)
    if (!used[k]) {
      word.push_back(k);
      word.push_back(-k);
    }
  return FramedBraidLink(link.strands(), std::move(word), link.framings());
}

SeifertMatrix seifert_matrix(const FramedBraidLink& link) {
  if (link.is_empty()) return SeifertMatrix{IntMatrix()};
  if (!bennequin_connected(link))
    throw DisconnectedSurfaceError(
        "Bennequin surface is disconnected; restrict to a sublink or apply "
        "connect_bennequin first");

  // loop = consecutive pair of bands on one generator index
  struct Loop {
    int gen;
    std::size_t t1, t2;  // word positions of the two bands
    int s1, s2;          // their signs
  };
  const auto& w = link.word();
  std::map<int, std::vector<std::size_t>> bands;  // gen -> positions
  for (std::size_t t = 0; t < w.size(); ++t) bands[std::abs(w[t])].push_back(t);

  std::vector<Loop> loops;
  for (const auto& [gen, ts] : bands)
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
      loops.push_back(Loop{gen, ts[i], ts[i + 1],
                           w[ts[i]] > 0 ? 1 : -1, w[ts[i + 1]] > 0 ? 1 : -1});
  // map iteration gives (gen, t1) order already

  const std::size_t n = loops.size();
  IntMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Loop& x = loops[i];
    if (x.s1 == x.s2) v(i, i) = -x.s1;  // (+,+) -> -1, (-,-) -> +1, mixed -> 0
    for (std::size_t j = i + 1; j < n; ++j) {
      const Loop& y = loops[j];
      if (y.gen == x.gen) {
        // consecutive loops sharing the middle band (j follows i directly)
        if (y.t1 == x.t2) {
          if (x.s2 > 0)
            v(i, j) = 1;
          else
            v(j, i) = -1;
        }
      } else if (y.gen == x.gen + 1 || y.gen == x.gen - 1) {
        // loops on adjacent disks link when their band intervals interleave
        if (x.t1 < y.t1 && y.t1 < x.t2 && x.t2 < y.t2)
          v(i, j) = -1;
        else if (y.t1 < x.t1 && x.t1 < y.t2 && y.t2 < x.t2)
          v(j, i) = -1;
      }
    }
  }
  return SeifertMatrix{v};
}

Int alexander_at_minus_one(const SeifertMatrix& v) {
  return (v.v + v.v.transpose()).determinant();
}

namespace {

// q(x) = x^T V x over GF(2)
int q_of(const std::vector<std::uint8_t>& x, const IntMatrix& v) {
  int acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] && is_odd(v(i, j))) acc ^= 1;
  }
  return acc;
}

int pair_of(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y,
            const IntMatrix& lambda) {
  int acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] && is_odd(lambda(i, j))) acc ^= 1;
  }
  return acc;
}

std::optional<int> arf_of_seifert(const IntMatrix& v) {
  const std::size_t n = v.rows();
  IntMatrix lambda = v + v.transpose();

  // symplectic reduction of the working basis; leftovers span the radical
  std::vector<std::vector<std::uint8_t>> basis;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint8_t> e(n, 0);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  int arf_acc = 0;
  std::vector<std::vector<std::uint8_t>> radical;
  while (!basis.empty()) {
    auto a = basis.front();
    basis.erase(basis.begin());
    std::size_t mate = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (pair_of(a, basis[i], lambda)) {
        mate = i;
        break;
      }
    if (mate == basis.size()) {
      radical.push_back(std::move(a));
      continue;
    }
    auto b = basis[mate];
    basis.erase(basis.begin() + mate);
    arf_acc ^= q_of(a, v) & q_of(b, v);
    for (auto& u : basis) {
      if (pair_of(u, b, lambda))
        for (std::size_t i = 0; i < n; ++i) u[i] ^= a[i];
      if (pair_of(u, a, lambda))
        for (std::size_t i = 0; i < n; ++i) u[i] ^= b[i];
    }
  }
  // q is linear on the radical; it descends iff it kills the radical
  for (const auto& r : radical)
    if (q_of(r, v)) return std::nullopt;
  return arf_acc;
}

}  // namespace

std::optional<int> arf(const FramedBraidLink& link, const std::vector<int>& mask) {
  FramedBraidLink sub = link.sublink(mask);
  if (sub.is_empty()) return 0;  // Arf of the empty link is 0 by convention

  // sublinks recur across spin enumerations; memoize by diagram
  static std::mutex cache_mutex;
  static std::unordered_map<std::string, std::optional<int>> cache;
  const std::string key = std::to_string(sub.strands()) + sub.to_string();
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto result = arf_of_seifert(seifert_matrix(connect_bennequin(sub)).v);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, result);
  }
  return result;
}

std::optional<int> arf(const FramedBraidLink& link) {
  std::vector<int> all(link.component_count());
  std::iota(all.begin(), all.end(), 0);
  return arf(link, all);
}

}  // namespace clasperkit
