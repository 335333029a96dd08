#pragma once

#include <string>

#include <json.hpp>

#include "hypvol/bound.hpp"
#include "hypvol/combinatorial_map.hpp"

namespace hypvol::cli {

using Json = nlohmann::ordered_json;

// Fixed six fractional digits. printf rounds the exact binary value, so ties
// go to even; "-0.000000" is normalised.
std::string fixed6(double v);
// A JSON number whose shortest representation is the six-digit rendering.
Json number6(double v);

Json census_json(const SkeletonCensus& c);
std::string census_line(const SkeletonCensus& c);

Json bound_json(const Bound& b);
Json report_json(const Json& input, const Json& census, const BoundReport& r);
std::string report_table(const std::string& title, const std::string& census, const BoundReport& r);
std::string bound_table(const Bound& b);

}  // namespace hypvol::cli
