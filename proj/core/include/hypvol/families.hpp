#pragma once

#include "hypvol/combinatorial_map.hpp"

namespace hypvol {

CombinatorialMap tetrahedron();
CombinatorialMap cube();
CombinatorialMap octahedron();
CombinatorialMap pyramid(int n);
CombinatorialMap bipyramid(int n);
CombinatorialMap prism(int n);
CombinatorialMap antiprism(int n);

// W_n: an n-gonal base with two adjacent apexes, one joined to two
// consecutive base vertices and the other to the remaining n - 2.
CombinatorialMap two_apex_pyramid(int n);

// A(n)*: the antiprism A(n-1) with an octahedron glued onto one of its
// triangles, drawn directly rather than via the medial construction.
CombinatorialMap twisted_antiprism(int n);

}  // namespace hypvol
