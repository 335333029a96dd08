#pragma once

#include "hypvol/bound.hpp"
#include "hypvol/combinatorial_map.hpp"
#include "hypvol/exact_form.hpp"

namespace hypvol {

// Atkinson's bound for non-obtuse polyhedra whose vertices are all 3- or
// 4-valent.
LinearForm atkinson_mixed_bound(int V3, int V4);

struct IrpBounds {
  LinearForm lower;
  LinearForm upper;
};

// Bounds for an ideal right-angled polyhedron with V vertices.
IrpBounds irp_bounds(int V);

// Upper bound for generalized polyhedra with a 3-connected skeleton of E edges.
LinearForm edge_count_bound(int E, bool is_tetrahedron);

// Bipyramid decomposition bounds for IRPs from their face census.
LinearForm face_census_bound(const SkeletonCensus& census);
LinearForm face_census_log_bound(const SkeletonCensus& census);

LinearForm irp_triangle_bound(int V, int p3);

// Upper bound in terms of E, V_3 and p_3; the all-trivalent variant drops V_3.
LinearForm edge_triangle_bound(int E, int V3, int p3, bool all_trivalent);

LinearForm prism_atkinson_bound(int n);

// n at which the prism form 5 v_tet n - 4 v_tet drops below
// prism_atkinson_bound(n).
double prism_crossover();

// The all-trivalent edge_triangle_bound is strictly below the E > 24 form of
// edge_count_bound exactly when E + p3_coefficient * p3 > constant.
struct TrivalentThreshold {
  double p3_coefficient;
  double constant;
};
TrivalentThreshold trivalent_threshold();

// Every bound that applies to a polyhedron with skeleton m, including the
// IRP bounds evaluated on medial(m), with best entries marked.
BoundReport rectification_bounds(const CombinatorialMap& m);

}  // namespace hypvol
