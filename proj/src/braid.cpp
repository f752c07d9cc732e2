#include "clasperkit/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "clasperkit/errors.hpp"

namespace clasperkit {

FramedBraidLink::FramedBraidLink(int strands, std::vector<int> word,
                                 std::vector<Int> framings)
    : strands_(strands), word_(std::move(word)), framings_(std::move(framings)) {
  if (strands_ < 1) throw ValidationError("strands must be positive");
  for (int letter : word_) {
    if (letter == 0 || std::abs(letter) >= strands_)
      throw ValidationError("braid letter " + std::to_string(letter) +
                            " out of range for " + std::to_string(strands_) +
                            " strands");
  }
  if (framings_.size() != component_count())
    throw ValidationError("framings count " + std::to_string(framings_.size()) +
                          " != component count " +
                          std::to_string(component_count()));
}

FramedBraidLink FramedBraidLink::empty_link() { return FramedBraidLink(); }

std::vector<int> FramedBraidLink::permutation() const {
  std::vector<int> pos(strands_);
  std::iota(pos.begin(), pos.end(), 1);  // pos[p-1] = strand at position p
  for (int letter : word_) {
    int k = std::abs(letter);
    std::swap(pos[k - 1], pos[k]);
  }
  // strand pos[p-1] exits at position p  =>  perm[strand-1] = p
  std::vector<int> perm(strands_);
  for (int p = 1; p <= strands_; ++p) perm[pos[p - 1] - 1] = p;
  return perm;
}

std::vector<std::vector<int>> FramedBraidLink::components() const {
  if (is_empty()) return {};
  std::vector<int> perm = permutation();
  std::vector<bool> seen(strands_, false);
  std::vector<std::vector<int>> comps;
  for (int s = 1; s <= strands_; ++s) {
    if (seen[s - 1]) continue;
    std::vector<int> cyc;
    int t = s;
    while (!seen[t - 1]) {
      seen[t - 1] = true;
      cyc.push_back(t);
      t = perm[t - 1];
    }
    std::sort(cyc.begin(), cyc.end());
    comps.push_back(std::move(cyc));
  }
  // outer scan from strand 1 already orders components by min strand
  return comps;
}

std::vector<int> FramedBraidLink::strand_component() const {
  std::vector<int> sc(strands_, -1);
  auto comps = components();
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int s : comps[c]) sc[s - 1] = static_cast<int>(c);
  return sc;
}

IntMatrix FramedBraidLink::linking_matrix() const {
  if (is_empty()) return IntMatrix();
  const auto sc = strand_component();
  const std::size_t m = framings_.size();
  IntMatrix cross(m, m);  // signed inter-component crossing counts
  std::vector<int> pos(strands_);
  std::iota(pos.begin(), pos.end(), 1);
  for (int letter : word_) {
    int k = std::abs(letter);
    int a = pos[k - 1], b = pos[k];
    int ca = sc[a - 1], cb = sc[b - 1];
    if (ca != cb) {
      int sg = letter > 0 ? 1 : -1;
      cross(ca, cb) += sg;
      cross(cb, ca) += sg;
    }
    std::swap(pos[k - 1], pos[k]);
  }
  IntMatrix b(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    b(i, i) = framings_[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      // closed components cross an even number of times
      if (is_odd(cross(i, j)))
        throw Error("internal: odd inter-component crossing count");
      b(i, j) = cross(i, j) / 2;
      b(j, i) = b(i, j);
    }
  }
  return b;
}

FramedBraidLink FramedBraidLink::sublink(const std::vector<int>& comps) const {
  auto all = components();
  std::vector<bool> keep_comp(all.size(), false);
  for (int c : comps) {
    if (c < 0 || static_cast<std::size_t>(c) >= all.size())
      throw ValidationError("component index " + std::to_string(c) +
                            " out of range");
    keep_comp[c] = true;
  }
  std::vector<bool> keep_strand(strands_ + 1, false);
  int kept = 0;
  for (std::size_t c = 0; c < all.size(); ++c)
    if (keep_comp[c])
      for (int s : all[c]) {
        keep_strand[s] = true;
        ++kept;
      }
  if (kept == 0) return empty_link();
  if (kept == strands_) return *this;

  std::vector<int> pos(strands_);
  std::iota(pos.begin(), pos.end(), 1);
  std::vector<int> new_word;
  for (int letter : word_) {
    int k = std::abs(letter);
    int a = pos[k - 1], b = pos[k];
    if (keep_strand[a] && keep_strand[b]) {
      // position of the crossing among surviving strands at this instant
      int rank = 0;
      for (int p = 1; p <= k; ++p)
        if (keep_strand[pos[p - 1]]) ++rank;
      new_word.push_back(letter > 0 ? rank : -rank);
    }
    std::swap(pos[k - 1], pos[k]);
  }
  std::vector<Int> new_framings;
  for (std::size_t c = 0; c < all.size(); ++c)
    if (keep_comp[c]) new_framings.push_back(framings_[c]);
  return FramedBraidLink(kept, std::move(new_word), std::move(new_framings));
}

std::string FramedBraidLink::to_string() const {
  std::ostringstream os;
  os << "braid(n=" << strands_ << ", w=[";
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) os << ',';
    os << word_[i];
  }
  os << "], f=[";
  for (std::size_t i = 0; i < framings_.size(); ++i) {
    if (i) os << ',';
    os << framings_[i];
  }
  os << "])";
  return os.str();
}

FramedBraidLink markov_stabilize(const FramedBraidLink& link, int sign) {
  if (link.is_empty())
    throw ValidationError("cannot stabilize the empty link");
  if (sign != 1 && sign != -1) throw ValidationError("sign must be +-1");
  int n = link.strands();
  std::vector<int> word = link.word();
  word.push_back(sign * n);
  return FramedBraidLink(n + 1, std::move(word), link.framings());
}

}  // namespace clasperkit
