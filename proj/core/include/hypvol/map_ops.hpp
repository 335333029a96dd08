#pragma once

#include <vector>

#include "hypvol/combinatorial_map.hpp"

namespace hypvol {

// Medial map: one vertex per edge, one edge per corner (d, sigma(d)).
// Dart 2d sits at the midpoint of d's edge and dart 2d + 1 at the midpoint
// of sigma(d)'s edge.
CombinatorialMap medial(const CombinatorialMap& m);

// Dual map with the same edge involution and sigma* = sigma . alpha, so that
// dual(dual(m)) == m.
CombinatorialMap dual(const CombinatorialMap& m);

// Isomorphism up to relabelling of darts, reflections allowed.
bool maps_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b);

// Underlying simple graph stays connected after deleting any two vertices.
bool is_three_connected(const CombinatorialMap& m);

// Conjugates the map by perm: dart d of m becomes dart perm[d].
CombinatorialMap relabel_darts(const CombinatorialMap& m, const std::vector<Dart>& perm);

// Same darts with the rotation reversed.
CombinatorialMap mirror(const CombinatorialMap& m);

}  // namespace hypvol
