#include "hypvol/augment.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hypvol/errors.hpp"

namespace hypvol {
namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw ConstructionInconsistency("augment: " + what);
}

}  // namespace

AugmentedPolyhedron augment(const TwistReducedDiagram& d) {
  validate_diagram(d);
  const CombinatorialMap& D = d.map;
  const Orbits verts = vertex_orbits(D);
  const int t = static_cast<int>(verts.size());
  if (t < 2) throw InvalidArgument("augment: need at least 2 twist regions");
  const auto n = static_cast<std::size_t>(D.dart_count());

  std::vector<int> position(n);
  for (const auto& cyc : verts.cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) position[static_cast<std::size_t>(cyc[k])] = static_cast<int>(k);
  }
  auto vertex_of = [&](Dart x) { return verts.orbit_of[static_cast<std::size_t>(x)]; };
  // x opens an augmentation corner (x, sigma x) at its vertex
  auto opens_corner = [&](Dart x) {
    return position[static_cast<std::size_t>(x)] % 2 == d.axis[static_cast<std::size_t>(vertex_of(x))];
  };
  auto red_dart = [&](Dart x) { return 4 * vertex_of(x) + position[static_cast<std::size_t>(x)]; };

  const std::vector<Dart> edges = edge_representatives(D);
  const std::size_t total = n + 4 * edges.size();  // 4t red darts, 8t black darts
  std::vector<Dart> alpha(total, -1);
  std::vector<Dart> sigma(total, -1);
  std::vector<Dart> spoke_at_black(n, -1);
  std::vector<Dart> base_at_first(n, -1);   // indexed by the corner's opening dart
  std::vector<Dart> base_at_second(n, -1);  // indexed by the corner's opening dart

  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Dart a = edges[e];
    const Dart b = D.alpha(a);
    const Dart first = 4 * t + 4 * static_cast<Dart>(e);
    // counterclockwise around the midpoint of {a, b}, starting towards b's end
    std::vector<std::pair<int, Dart>> slots;  // (0 spoke, 1 base-first, 2 base-second), dart of D
    slots.emplace_back(0, b);
    if (!opens_corner(b)) slots.emplace_back(2, D.sigma_inv(b));
    if (opens_corner(a)) slots.emplace_back(1, a);
    slots.emplace_back(0, a);
    if (!opens_corner(a)) slots.emplace_back(2, D.sigma_inv(a));
    if (opens_corner(b)) slots.emplace_back(1, b);
    check(slots.size() == 4, "black vertex of edge " + std::to_string(e) + " is not 4-valent");
    for (int j = 0; j < 4; ++j) {
      const Dart pd = first + j;
      sigma[static_cast<std::size_t>(pd)] = first + (j + 1) % 4;
      const auto [kind, x] = slots[static_cast<std::size_t>(j)];
      auto& table = kind == 0 ? spoke_at_black : (kind == 1 ? base_at_first : base_at_second);
      table[static_cast<std::size_t>(x)] = pd;
    }
  }

  for (Dart x = 0; static_cast<std::size_t>(x) < n; ++x) {
    const Dart r = red_dart(x);
    sigma[static_cast<std::size_t>(r)] = 4 * vertex_of(x) + (position[static_cast<std::size_t>(x)] + 1) % 4;
    const Dart s = spoke_at_black[static_cast<std::size_t>(x)];
    alpha[static_cast<std::size_t>(r)] = s;
    alpha[static_cast<std::size_t>(s)] = r;
    if (opens_corner(x)) {
      const Dart u = base_at_first[static_cast<std::size_t>(x)];
      const Dart w = base_at_second[static_cast<std::size_t>(x)];
      check(u >= 0 && w >= 0, "base edge of corner at dart " + std::to_string(x) + " is incomplete");
      alpha[static_cast<std::size_t>(u)] = w;
      alpha[static_cast<std::size_t>(w)] = u;
    }
  }
  check(std::find(alpha.begin(), alpha.end(), -1) == alpha.end(), "unpaired dart");

  AugmentedPolyhedron P;
  P.twist_count = t;
  try {
    P.map = CombinatorialMap(std::move(alpha), std::move(sigma));
  } catch (const MapValidationError& e) {
    check(false, e.what());
  }
  SkeletonCensus c;
  try {
    c = validate_map(P.map);
  } catch (const MapValidationError& e) {
    check(false, e.what());
  }
  check(c.V == 3 * t && c.E == 6 * t && c.F == 3 * t + 2, "wrong V, E or F");
  check(c.is_regular(4), "not 4-regular");
  check(c.min_face() >= 3, "a face has fewer than 3 sides (bad axis marking?)");

  for (int v = 0; v < t; ++v) P.red_vertices.push_back(v);
  for (std::size_t e = 0; e < edges.size(); ++e) P.black_vertices.push_back(t + static_cast<int>(e));

  const Orbits faces = face_orbits(P.map);
  for (Dart x = 0; static_cast<std::size_t>(x) < n; ++x) {
    if (!opens_corner(x)) continue;
    const int f = faces.orbit_of[static_cast<std::size_t>(red_dart(D.sigma(x)))];
    const auto& cyc = faces.cycles[static_cast<std::size_t>(f)];
    check(cyc.size() == 3, "augmentation corner does not bound a triangle");
    const auto reds = std::count_if(cyc.begin(), cyc.end(), [&](Dart pd) { return pd < 4 * t; });
    check(reds == 1, "dark triangle does not contain exactly one red vertex");
    P.dark_faces.push_back(f);
  }
  std::sort(P.dark_faces.begin(), P.dark_faces.end());
  check(std::adjacent_find(P.dark_faces.begin(), P.dark_faces.end()) == P.dark_faces.end(),
        "two augmentation corners share a face");
  check(static_cast<int>(P.dark_faces.size()) == 2 * t, "expected 2t dark triangles");

  P.white_census = white_face_census(P);
  int weighted = 0;
  for (auto [size, count] : P.white_census) weighted += size * count;
  check(weighted == 6 * t, "white face sizes do not sum to 6t");
  return P;
}

std::map<int, int> white_face_census(const AugmentedPolyhedron& p) {
  const Orbits faces = face_orbits(p.map);
  std::map<int, int> census;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (std::binary_search(p.dark_faces.begin(), p.dark_faces.end(), static_cast<int>(f))) continue;
    ++census[static_cast<int>(faces.cycles[f].size())];
  }
  return census;
}

}  // namespace hypvol
