#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clasperkit/presentation.hpp"
#include "clasperkit/spin.hpp"

namespace clasperkit {

// On-disk description of a surgery presentation (.cmf): line-oriented UTF-8
// key-value records, arrays as bracketed comma lists.
//
//   version: 1
//   label: lens_5_1
//   strands: 1
//   word: []
//   framings: [5]
//   spin: [1]
//   notes: L(5,1) as a 5-framed unknot
//
// Matrix-only form replaces strands/word/framings by
//   matrix: [[2,1],[1,3]]
// Exactly one of the two presentation forms must be present. An empty link is
// written as strands: 0 with empty word and framings.
struct ManifoldManifest {
  int version = 1;
  std::string label;

  std::optional<int> strands;
  std::optional<std::vector<int>> word;
  std::optional<std::vector<Int>> framings;
  std::optional<IntMatrix> matrix;

  std::optional<Bits> spin;
  std::string notes;

  bool operator==(const ManifoldManifest& o) const;

  SurgeryPresentation to_presentation() const;
  std::optional<SpinPresentation> to_spin_presentation() const;

  static ManifoldManifest from_presentation(const SurgeryPresentation& p,
                                            const std::optional<Bits>& spin = {});
};

// Throws ParseError on malformed text, ValidationError on well-formed text
// violating the manifest contract; messages name the offending field.
ManifoldManifest parse_manifest(const std::string& text);
ManifoldManifest load_manifest(const std::string& path);
std::string print_manifest(const ManifoldManifest& m);
void save_manifest(const ManifoldManifest& m, const std::string& path);

}  // namespace clasperkit
