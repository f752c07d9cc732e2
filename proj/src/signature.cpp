#include "clasperkit/signature.hpp"

#include <vector>

#include "clasperkit/errors.hpp"
#include "clasperkit/rat_matrix.hpp"

namespace clasperkit {

int signature(const IntMatrix& s) {
  if (!s.is_symmetric())
    throw NotSymmetricError("signature needs a symmetric matrix");
  const std::size_t n = s.rows();
  RatMatrix a(s);
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;

  int sig = 0;
  while (!live.empty()) {
    // 1x1 pivot: first live index with nonzero diagonal
    std::size_t kpos = live.size();
    for (std::size_t t = 0; t < live.size(); ++t)
      if (a(live[t], live[t]) != 0) {
        kpos = t;
        break;
      }
    if (kpos < live.size()) {
      std::size_t k = live[kpos];
      const Rat piv = a(k, k);
      sig += piv > 0 ? 1 : -1;
      live.erase(live.begin() + kpos);
      for (std::size_t ti = 0; ti < live.size(); ++ti)
        for (std::size_t tj = ti; tj < live.size(); ++tj) {
          std::size_t i = live[ti], j = live[tj];
          Rat v = a(i, j) - a(i, k) * a(k, j) / piv;
          a(i, j) = v;
          a(j, i) = v;
        }
      continue;
    }
    // all live diagonals zero: 2x2 pivot [[0,c],[c,0]], signature 0
    std::size_t kp = live.size(), lp = live.size();
    for (std::size_t ti = 0; ti < live.size() && kp == live.size(); ++ti)
      for (std::size_t tj = ti + 1; tj < live.size(); ++tj)
        if (a(live[ti], live[tj]) != 0) {
          kp = ti;
          lp = tj;
          break;
        }
    if (kp == live.size()) break;  // remaining block is zero
    std::size_t k = live[kp], l = live[lp];
    const Rat c = a(k, l);
    live.erase(live.begin() + lp);
    live.erase(live.begin() + kp);
    for (std::size_t ti = 0; ti < live.size(); ++ti)
      for (std::size_t tj = ti; tj < live.size(); ++tj) {
        std::size_t i = live[ti], j = live[tj];
        Rat v = a(i, j) - (a(i, k) * a(l, j) + a(i, l) * a(k, j)) / c;
        a(i, j) = v;
        a(j, i) = v;
      }
  }
  return sig;
}

}  // namespace clasperkit
