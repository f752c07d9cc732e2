#pragma once

#include <optional>
#include <vector>

#include "clasperkit/braid.hpp"
#include "clasperkit/int_matrix.hpp"

namespace clasperkit {

// Seifert matrix of the Bennequin surface of a braid closure (one disk per
// strand, one band per letter), in the band-loop basis: one loop per
// consecutive pair of bands on the same generator index.
struct SeifertMatrix {
  IntMatrix v;
};

// The Bennequin surface is connected iff every generator index occurs.
bool bennequin_connected(const FramedBraidLink& link);

// Deterministic repair pass: for each unused generator index k (increasing),
// append the cancelling pair (+k, -k). The braid word element, hence the
// closure, is unchanged; the surface becomes connected.
FramedBraidLink connect_bennequin(const FramedBraidLink& link);

// Throws DisconnectedSurfaceError when the surface is disconnected; callers
// wanting the repair apply connect_bennequin first (arf does).
SeifertMatrix seifert_matrix(const FramedBraidLink& link);

// det(V + V^T); +-(knot determinant) for knots, 1 for the empty matrix.
Int alexander_at_minus_one(const SeifertMatrix& v);

// Arf invariant of the sublink selected by component indices, via the mod-2
// quadratic form q(x) = x^T V x on the radical-free quotient of V + V^T.
// nullopt exactly when q does not descend (the sublink is not proper).
std::optional<int> arf(const FramedBraidLink& link, const std::vector<int>& mask);
std::optional<int> arf(const FramedBraidLink& link);

}  // namespace clasperkit
