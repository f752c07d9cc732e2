#pragma once

#include <array>
#include <string>
#include <vector>

#include "clasperkit/presentation.hpp"
#include "clasperkit/spin.hpp"

namespace clasperkit {

// One leaf of a Y-clasper: a contiguous (possibly empty) range of strand
// positions it encircles at the insertion slice, and its framing.
struct LeafSpec {
  bool empty = true;
  int lo = 0, hi = 0;  // 1-based inclusive positions, meaningful when !empty
  Int framing = 0;

  static LeafSpec trivial() { return LeafSpec{}; }
  static LeafSpec range(int lo, int hi, Int framing = 0);
  bool operator==(const LeafSpec& o) const;
};

// Insertion site for the six-component surgery link of a Y-clasper: a word
// position plus the three leaves. Textual form (CLI):
//   site=<int>; leaf1=<a>-<b>@f=<int>; leaf2=empty; leaf3=empty@f=<int>
struct ClasperSpec {
  std::size_t site = 0;
  std::array<LeafSpec, 3> leaves;

  static ClasperSpec parse(const std::string& text);
  std::string format() const;
  bool operator==(const ClasperSpec& o) const {
    return site == o.site && leaves == o.leaves;
  }
};

// Throws InvalidSpecError on overlapping ranges, out-of-range site or range.
void validate_spec(const SurgeryPresentation& p, const ClasperSpec& spec);

struct ClasperSurgeryResult {
  SurgeryPresentation presentation;       // six more components
  std::vector<std::size_t> old_to_new;    // old component -> new index
  std::size_t old_components = 0;
  std::array<std::vector<Int>, 3> leaf_linking;  // a_i: leaf i vs old comps
  ClasperSpec spec;

  std::size_t inner_component(int i) const { return old_components + i; }
  std::size_t leaf_component(int i) const { return old_components + 3 + i; }
};

// Splice the six-component link of the clasper into the braid closure:
// three 0-framed inner components forming a Borromean triple split from the
// old link, and three leaves, each Hopf-linked with its inner component and
// encircling its strand range.
ClasperSurgeryResult insert_clasper(const SurgeryPresentation& p,
                                    const ClasperSpec& spec);

// Linking matrix the spliced diagram must have: old block B, zero inner
// block, identity leaf-inner incidence, leaf framings on the diagonal,
// leaf-old rows a_i, zero leaf-leaf off-diagonal.
IntMatrix predicted_block_matrix(const IntMatrix& b, const ClasperSpec& spec,
                                 const std::array<std::vector<Int>, 3>& a);

// Signed strand counts per old component inside each leaf range at the slice.
std::array<std::vector<Int>, 3> leaf_linking_vectors(const SurgeryPresentation& p,
                                                     const ClasperSpec& spec);

// The unique characteristic sublink on the surgered presentation restricting
// to C on the old components: C'(leaf_i) = 0, C'(inner_i) = f_i + a_i.C mod 2.
// Verified against B' and for uniqueness; throws CorrespondenceViolationError
// if the template ever produced something else.
CharSublink corresponding_spin(const CharSublink& c,
                               const ClasperSurgeryResult& result);

// Surgery along finitely many disjoint claspers: fold over the spec list,
// each spec addressed to the previous result.
SurgeryPresentation apply_claspers(SurgeryPresentation p,
                                   const std::vector<ClasperSpec>& specs);
SpinPresentation apply_claspers(SpinPresentation s,
                                const std::vector<ClasperSpec>& specs);

namespace detail {
// Negative-control knob for the property suites: replaces the Borromean core
// word by the empty word (same linking matrix, wrong geometry). Test use only.
extern bool corrupt_core_for_tests;
}  // namespace detail

}  // namespace clasperkit
