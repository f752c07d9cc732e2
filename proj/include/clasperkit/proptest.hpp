#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "clasperkit/braid.hpp"
#include "clasperkit/clasper.hpp"
#include "clasperkit/int_matrix.hpp"
#include "clasperkit/presentation.hpp"

namespace clasperkit {

using Rng = std::mt19937_64;

// rng() % n style draws keep the suites reproducible across platforms
// (std::uniform_int_distribution is not pinned by the standard).
long long rand_range(Rng& rng, long long lo, long long hi);

IntMatrix random_matrix(Rng& rng, std::size_t max_rows, std::size_t max_cols,
                        long long max_abs);
IntMatrix random_symmetric(Rng& rng, std::size_t n, long long max_abs);
IntMatrix random_unimodular(Rng& rng, std::size_t n, int ops);

FramedBraidLink random_link(Rng& rng, int max_strands, int max_word,
                            long long max_framing);
FramedBraidLink random_knot(Rng& rng, int max_strands, int max_word);

// presentation with a small spin count, suitable for full spin enumeration
SurgeryPresentation random_diagram_presentation(Rng& rng, int max_strands,
                                                int max_word, std::size_t max_nullity);

ClasperSpec random_clasper_spec(Rng& rng, const FramedBraidLink& link);

// one legal braid-relation rewrite (commutation or Yang-Baxter) at a random
// applicable spot; returns the word unchanged when none applies
std::vector<int> random_braid_rewrite(Rng& rng, const std::vector<int>& word);

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

// The randomized invariance suites of all modules. `count` scales the number
// of cases per property; deterministic for a fixed seed.
std::vector<PropertyResult> run_property_suites(std::uint64_t seed, int count);

std::string format_property_table(const std::vector<PropertyResult>& results);

// Individual suites (used by the acceptance tests with pinned counts).
PropertyResult prop_snf_invariants(Rng& rng, int cases);
PropertyResult prop_signature_symmetries(Rng& rng, int cases);
PropertyResult prop_characteristic_solvable(Rng& rng, int cases);
PropertyResult prop_linking_braid_relations(Rng& rng, int cases);
PropertyResult prop_arf_det_criterion(Rng& rng, int cases);
PropertyResult prop_markov_invariance(Rng& rng, int cases);
PropertyResult prop_spin_count(Rng& rng, int cases);
PropertyResult prop_characteristic_proper(Rng& rng, int cases);
PropertyResult prop_twist_invariance(Rng& rng, int cases);
PropertyResult prop_blowup_exact(Rng& rng, int cases);
PropertyResult prop_clasper_structural(Rng& rng, int cases);
PropertyResult prop_matveev_invariance(Rng& rng, int cases);
PropertyResult prop_massuyeau_invariance(Rng& rng, int cases);
PropertyResult prop_pairing_vs_brute_force(Rng& rng, int cases);
PropertyResult prop_presentation_moves(Rng& rng, int cases);
PropertyResult prop_no_2torsion_consistency(Rng& rng, int cases);
PropertyResult prop_manifest_roundtrip(Rng& rng, int cases);

}  // namespace clasperkit
