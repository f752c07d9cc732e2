#pragma once

#include <cstdint>
#include <vector>

#include "clasperkit/int_matrix.hpp"

namespace clasperkit {

// Mod-2 vectors as 0/1 bytes.
using Bits = std::vector<std::uint8_t>;

Bits xor_bits(const Bits& a, const Bits& b);
bool all_zero(const Bits& a);
std::string bits_to_string(const Bits& a);

Bits mod2_diagonal(const IntMatrix& a);
Bits mod2_mat_vec(const IntMatrix& a, const Bits& x);

// Solutions of A x = b over the 2-element field.
// consistent == false means the system has no solution; otherwise the full
// solution set is particular + span(kernel).
struct Mod2AffineSolution {
  bool consistent = false;
  Bits particular;
  std::vector<Bits> kernel;
};

Mod2AffineSolution solve_mod2_affine(const IntMatrix& a, const Bits& b);

std::size_t mod2_nullity(const IntMatrix& a);

}  // namespace clasperkit
