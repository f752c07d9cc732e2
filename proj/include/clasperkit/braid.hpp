#pragma once

#include <string>
#include <vector>

#include "clasperkit/int_matrix.hpp"

namespace clasperkit {

// A framed link presented as a braid closure. Letters are nonzero integers,
// +k / -k for the braid generator sigma_k / its inverse, 1 <= k < strands.
// Components are the cycles of the underlying permutation, ordered by their
// smallest strand index; framings are listed in that order.
//
// Sign convention: a positive letter is a positive crossing, so the closure
// of sigma_1^2 is the positive Hopf link with linking number +1.
//
// The empty link (zero components) is a first-class value, exposed through
// empty_link() / is_empty().
class FramedBraidLink {
 public:
  FramedBraidLink(int strands, std::vector<int> word, std::vector<Int> framings);

  static FramedBraidLink empty_link();
  bool is_empty() const { return strands_ == 0; }

  int strands() const { return strands_; }
  const std::vector<int>& word() const { return word_; }
  const std::vector<Int>& framings() const { return framings_; }

  // Permutation of strand positions induced by the word: position i (1-based)
  // at the top exits at position perm()[i-1] at the bottom.
  std::vector<int> permutation() const;

  // Cycles of the permutation as sorted strand sets, ordered by min strand.
  std::vector<std::vector<int>> components() const;
  std::size_t component_count() const { return components().size(); }

  // strand (1-based) -> component index (0-based)
  std::vector<int> strand_component() const;

  IntMatrix linking_matrix() const;

  // Restriction to a set of component indices. Letters touching deleted
  // strands vanish; surviving strands are renumbered. An empty selection
  // yields the empty link.
  FramedBraidLink sublink(const std::vector<int>& comps) const;

  bool operator==(const FramedBraidLink& o) const {
    return strands_ == o.strands_ && word_ == o.word_ && framings_ == o.framings_;
  }

  std::string to_string() const;

 private:
  FramedBraidLink() : strands_(0) {}
  int strands_;
  std::vector<int> word_;
  std::vector<Int> framings_;
};

// Markov stabilization: one extra strand and the letter sign*(n); the closure
// is the same link with the same components and framings.
FramedBraidLink markov_stabilize(const FramedBraidLink& link, int sign);

}  // namespace clasperkit
