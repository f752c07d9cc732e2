// clasperkit: Y-equivalence invariants of closed (spin) 3-manifolds given by
// framed-link surgery presentations.
//
// Exit codes: 0 yes/ok, 1 no (or failed properties), 2 parse error,
// 3 validation error, 4 undecided.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "clasperkit/clasper.hpp"
#include "clasperkit/decide.hpp"
#include "clasperkit/errors.hpp"
#include "clasperkit/manifest.hpp"
#include "clasperkit/proptest.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitUndecided = 4;

int run_invariants(const std::string& path, long long cap2) {
  clasperkit::ManifoldManifest m = clasperkit::load_manifest(path);
  (void)cap2;
  std::cout << clasperkit::invariant_report(m.to_presentation());
  return kExitYes;
}

int run_compare(const std::string& path_a, const std::string& path_b,
                bool spin, long long cap2) {
  clasperkit::ManifoldManifest ma = clasperkit::load_manifest(path_a);
  clasperkit::ManifoldManifest mb = clasperkit::load_manifest(path_b);
  clasperkit::Verdict v;
  if (spin) {
    auto sa = ma.to_spin_presentation();
    auto sb = mb.to_spin_presentation();
    if (!sa || !sb)
      throw clasperkit::ValidationError(
          "field 'spin': --spin needs spin vectors in both manifests");
    v = clasperkit::y_equivalent_spin(*sa, *sb, clasperkit::Int(cap2));
  } else {
    v = clasperkit::y_equivalent(ma.to_presentation(), mb.to_presentation(),
                                 clasperkit::Int(cap2));
  }
  std::cout << v << "\n";
  switch (v.outcome) {
    case clasperkit::Ternary::Yes:
      return kExitYes;
    case clasperkit::Ternary::No:
      return kExitNo;
    default:
      return kExitUndecided;
  }
}

int run_surger(const std::string& path, const std::string& spec_text,
               const std::string& out_path) {
  clasperkit::ManifoldManifest m = clasperkit::load_manifest(path);
  clasperkit::ClasperSpec spec = clasperkit::ClasperSpec::parse(spec_text);
  clasperkit::SurgeryPresentation p = m.to_presentation();
  clasperkit::ClasperSurgeryResult r = clasperkit::insert_clasper(p, spec);

  std::optional<clasperkit::Bits> new_spin;
  if (m.spin) {
    clasperkit::CharSublink c =
        clasperkit::corresponding_spin(clasperkit::CharSublink{*m.spin}, r);
    new_spin = c.bits;
  }
  clasperkit::ManifoldManifest out =
      clasperkit::ManifoldManifest::from_presentation(r.presentation, new_spin);
  out.notes = "surgered from " + path + " with " + spec.format();
  clasperkit::save_manifest(out, out_path);

  std::cout << "wrote " << out_path << "\n";
  std::cout << "index map (old component -> new):";
  for (std::size_t i = 0; i < r.old_to_new.size(); ++i)
    std::cout << " " << i << "->" << r.old_to_new[i];
  std::cout << "\n";
  for (int i = 0; i < 3; ++i)
    std::cout << "inner" << (i + 1) << " -> " << r.inner_component(i)
              << ", leaf" << (i + 1) << " -> " << r.leaf_component(i) << "\n";
  return kExitYes;
}

int run_proptest(std::uint64_t seed, int count, bool corrupt) {
  clasperkit::detail::corrupt_core_for_tests = corrupt;
  auto results = clasperkit::run_property_suites(seed, count);
  std::cout << clasperkit::format_property_table(results);
  int failed = 0;
  for (const auto& r : results)
    if (!r.ok()) ++failed;
  std::cout << (failed ? "FAILED" : "OK") << ": "
            << (results.size() - failed) << "/" << results.size()
            << " properties passed\n";
  return failed ? kExitNo : kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Y-equivalence invariants of surgery presentations"};
  app.require_subcommand(1);

  long long cap2 = 256;
  app.add_option("--cap-2torsion", cap2,
                 "brute-force cap for the 2-primary pairing part")
      ->capture_default_str();

  std::string inv_path;
  auto* inv = app.add_subcommand("invariants",
                                 "print the invariant report of a manifest");
  inv->add_option("path", inv_path, "manifest (.cmf)")->required();

  std::string cmp_a, cmp_b;
  bool cmp_spin = false;
  auto* cmp = app.add_subcommand("compare",
                                 "decide Y-equivalence of two manifests");
  cmp->add_option("pathA", cmp_a, "first manifest")->required();
  cmp->add_option("pathB", cmp_b, "second manifest")->required();
  cmp->add_flag("--spin", cmp_spin, "compare as spin manifolds (Rochlin mod 8)");

  std::string sur_path, sur_spec, sur_out;
  auto* sur = app.add_subcommand("surger",
                                 "insert a Y-clasper and write the result");
  sur->add_option("path", sur_path, "input manifest")->required();
  sur->add_option("spec", sur_spec,
                  "clasper spec, e.g. 'site=0; leaf1=1-2@f=1; leaf2=empty; "
                  "leaf3=empty'")
      ->required();
  sur->add_option("-o,--output", sur_out, "output manifest path")->required();

  std::uint64_t seed = 42;
  int count = 50;
  bool corrupt = false;
  auto* prop = app.add_subcommand("proptest",
                                  "run the randomized invariance suites");
  prop->add_option("--seed", seed, "RNG seed")->capture_default_str();
  prop->add_option("--count", count, "cases per property")->capture_default_str();
  prop->add_flag("--negative-control", corrupt,
                 "corrupt the clasper template; the Massuyeau suite must fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitYes : kExitParse;
  }

  try {
    if (*inv) return run_invariants(inv_path, cap2);
    if (*cmp) return run_compare(cmp_a, cmp_b, cmp_spin, cap2);
    if (*sur) return run_surger(sur_path, sur_spec, sur_out);
    if (*prop) return run_proptest(seed, count, corrupt);
  } catch (const clasperkit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const clasperkit::InvalidSpecError& e) {
    std::cerr << "invalid clasper spec: " << e.what() << "\n";
    return kExitValidation;
  } catch (const clasperkit::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const clasperkit::SizeCapError& e) {
    std::cerr << "size cap exceeded: " << e.what()
              << " (see --cap-2torsion)\n";
    return kExitValidation;
  } catch (const clasperkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitYes;
}
