#pragma once

#include <map>
#include <vector>

#include "hypvol/combinatorial_map.hpp"
#include "hypvol/two_bridge.hpp"

namespace hypvol {

// The ideal right-angled polyhedron P obtained from a fully augmented link
// with the half-turns removed. Red vertex v carries darts 4v..4v+3 and black
// vertex e (the e-th diagram edge) carries darts 4t+4e..4t+4e+3, so vertex
// ids coincide with canonical sigma-orbit indices.
struct AugmentedPolyhedron {
  CombinatorialMap map;
  int twist_count = 0;
  std::vector<int> red_vertices;
  std::vector<int> black_vertices;
  std::vector<int> dark_faces;  // face ids in canonical face order
  std::map<int, int> white_census;
};

AugmentedPolyhedron augment(const TwistReducedDiagram& d);

std::map<int, int> white_face_census(const AugmentedPolyhedron& p);

}  // namespace hypvol
