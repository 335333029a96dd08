#include "hypvol/serialize.hpp"

#include <json.hpp>

#include "hypvol/errors.hpp"

namespace hypvol {
namespace {

using nlohmann::ordered_json;

ordered_json map_object(const CombinatorialMap& m) {
  ordered_json j;
  j["darts"] = m.dart_count();
  j["alpha"] = m.alpha_array();
  j["sigma"] = m.sigma_array();
  return j;
}

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const ordered_json::exception& e) {
    throw InvalidArgument(std::string("field \"") + key + "\" has the wrong type: " + e.what());
  }
}

CombinatorialMap map_of(const ordered_json& j) {
  const auto darts = field<long long>(j, "darts");
  auto alpha = field<std::vector<Dart>>(j, "alpha");
  auto sigma = field<std::vector<Dart>>(j, "sigma");
  if (darts < 0 || static_cast<std::size_t>(darts) != alpha.size() ||
      static_cast<std::size_t>(darts) != sigma.size()) {
    throw MapValidationError(MapInvariant::LengthMismatch, "\"darts\" disagrees with the array lengths");
  }
  CombinatorialMap m(std::move(alpha), std::move(sigma));
  validate_map(m);
  return m;
}

}  // namespace

std::string map_to_json(const CombinatorialMap& m) { return map_object(m).dump(); }

CombinatorialMap map_from_json(const std::string& text) { return map_of(parse(text)); }

std::string diagram_to_json(const TwistReducedDiagram& d) {
  ordered_json j = map_object(d.map);
  j["axis"] = d.axis;
  j["lengths"] = d.lengths;
  return j.dump();
}

TwistReducedDiagram diagram_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  TwistReducedDiagram d{map_of(j), field<std::vector<int>>(j, "axis"), field<std::vector<int>>(j, "lengths")};
  validate_diagram(d);
  return d;
}

std::string augmented_to_json(const AugmentedPolyhedron& p) {
  ordered_json j = map_object(p.map);
  j["red"] = p.red_vertices;
  j["dark_faces"] = p.dark_faces;
  ordered_json census = ordered_json::object();
  for (auto [n, f] : p.white_census) census[std::to_string(n)] = f;
  j["white_census"] = census;
  return j.dump();
}

}  // namespace hypvol
