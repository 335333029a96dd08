#pragma once

#include <string>

#include "hypvol/augment.hpp"
#include "hypvol/combinatorial_map.hpp"
#include "hypvol/two_bridge.hpp"

namespace hypvol {

// {"darts": N, "alpha": [...], "sigma": [...]}
std::string map_to_json(const CombinatorialMap& m);
// Throws InvalidArgument on malformed JSON and MapValidationError when the
// arrays do not describe a valid planar map.
CombinatorialMap map_from_json(const std::string& text);

// Map object plus "axis" and "lengths".
std::string diagram_to_json(const TwistReducedDiagram& d);
TwistReducedDiagram diagram_from_json(const std::string& text);

// Map object plus "red", "dark_faces" and "white_census".
std::string augmented_to_json(const AugmentedPolyhedron& p);

}  // namespace hypvol
