#pragma once

#include <vector>

#include "hypvol/combinatorial_map.hpp"
#include "hypvol/twist.hpp"

namespace hypvol {

// 4-regular map with one vertex per twist region. For the vertex whose
// rotation (from its minimal dart) is d0 d1 d2 d3, axis 0 places the
// augmentation triangles in corners (d0, d1) and (d2, d3), axis 1 in
// (d1, d2) and (d3, d0).
struct TwistReducedDiagram {
  CombinatorialMap map;
  std::vector<int> axis;
  std::vector<int> lengths;

  int twist_count() const { return static_cast<int>(axis.size()); }
  TwistDecomposition decomposition() const { return {lengths}; }
};

SkeletonCensus validate_diagram(const TwistReducedDiagram& d);

// Twist-reduced diagram of the two-bridge link b(p/q) in Conway normal form.
TwistReducedDiagram two_bridge_diagram(int p, int q);

// Whether b(p/q) is the figure-eight knot.
bool is_figure_eight_fraction(int p, int q);

}  // namespace hypvol
