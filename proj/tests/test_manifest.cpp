#include <doctest.h>

#include "clasperkit/errors.hpp"
#include "clasperkit/manifest.hpp"
#include "clasperkit/proptest.hpp"

using namespace clasperkit;

TEST_CASE("parse a word-form manifest") {
  ManifoldManifest m = parse_manifest(
      "version: 1\n"
      "label: poincare_trefoil\n"
      "strands: 2\n"
      "word: [-1, -1, -1]\n"
      "framings: [1]\n"
      "spin: [1]\n"
      "notes: +1 surgery on the left trefoil\n");
  CHECK(m.label == "poincare_trefoil");
  CHECK(m.strands == 2);
  CHECK(m.word == std::vector<int>{-1, -1, -1});
  REQUIRE(m.spin.has_value());
  CHECK(*m.spin == Bits{1});
  SurgeryPresentation p = m.to_presentation();
  CHECK(p.is_diagram());
  CHECK(p.component_count() == 1);
  CHECK(m.to_spin_presentation().has_value());
}

TEST_CASE("parse a matrix-form manifest") {
  ManifoldManifest m = parse_manifest(
      "version: 1\n"
      "label: hopf_2_3\n"
      "matrix: [[2,1],[1,3]]\n");
  REQUIRE(m.matrix.has_value());
  CHECK(*m.matrix == IntMatrix{{2, 1}, {1, 3}});
  CHECK(!m.to_presentation().is_diagram());
}

TEST_CASE("comments and blank lines are ignored") {
  ManifoldManifest m = parse_manifest(
      "# lens space\n"
      "version: 1\n"
      "\n"
      "matrix: [[5]]\n");
  CHECK(m.matrix.has_value());
}

TEST_CASE("parse errors name the field") {
  CHECK_THROWS_WITH_AS(parse_manifest("version: 1\nbogus: 3\nmatrix: [[5]]\n"),
                       doctest::Contains("bogus"), ParseError);
  CHECK_THROWS_AS(parse_manifest("matrix: [[5]]\n"), ParseError);  // no version
  CHECK_THROWS_WITH_AS(
      parse_manifest("version: 1\nword: [1\nmatrix: [[5]]\n"),
      doctest::Contains("word"), ParseError);
  CHECK_THROWS_AS(parse_manifest("version: 1\nmatrix: [[5]]\nmatrix: [[5]]\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_manifest("version: 1\nno colon here\n"), ParseError);
}

TEST_CASE("validation errors name the field") {
  // both forms at once
  CHECK_THROWS_AS(parse_manifest("version: 1\nstrands: 1\nword: []\n"
                                 "framings: [5]\nmatrix: [[5]]\n"),
                  ValidationError);
  // asymmetric matrix
  CHECK_THROWS_WITH_AS(parse_manifest("version: 1\nmatrix: [[1,2],[3,4]]\n"),
                       doctest::Contains("matrix"), ValidationError);
  // framings count mismatch
  CHECK_THROWS_AS(
      parse_manifest("version: 1\nstrands: 2\nword: [1,1]\nframings: [5]\n"),
      ValidationError);
  // spin of the wrong length
  CHECK_THROWS_WITH_AS(
      parse_manifest("version: 1\nmatrix: [[5]]\nspin: [1, 0]\n"),
      doctest::Contains("spin"), ValidationError);
  // spin that is not characteristic
  CHECK_THROWS_WITH_AS(parse_manifest("version: 1\nmatrix: [[5]]\nspin: [0]\n"),
                       doctest::Contains("spin"), ValidationError);
  // word letters out of range
  CHECK_THROWS_AS(
      parse_manifest("version: 1\nstrands: 2\nword: [3]\nframings: [0,0]\n"),
      ValidationError);
  // missing pieces of the word form
  CHECK_THROWS_AS(parse_manifest("version: 1\nstrands: 2\n"), ValidationError);
}

TEST_CASE("empty link manifest") {
  ManifoldManifest m = parse_manifest(
      "version: 1\nlabel: s3\nstrands: 0\nword: []\nframings: []\nspin: []\n");
  SurgeryPresentation p = m.to_presentation();
  CHECK(p.is_diagram());
  CHECK(p.link().is_empty());
  CHECK(m.to_spin_presentation().has_value());
}

TEST_CASE("print-parse round trip on randomized manifests") {
  Rng rng(103);
  PropertyResult r = prop_manifest_roundtrip(rng, 80);
  CHECK(r.failures == 0);
}

TEST_CASE("round trip preserves big framings") {
  ManifoldManifest m;
  m.label = "big";
  m.matrix = IntMatrix{{1000000007}};
  ManifoldManifest back = parse_manifest(print_manifest(m));
  CHECK(back == m);
}
