#include "hypvol/combinatorial_map.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hypvol/errors.hpp"

namespace hypvol {

std::string_view invariant_name(MapInvariant inv) {
  switch (inv) {
    case MapInvariant::LengthMismatch: return "length-mismatch";
    case MapInvariant::NotPermutation: return "not-a-permutation";
    case MapInvariant::FixedDart: return "fixed-dart";
    case MapInvariant::InvolutionViolation: return "involution-violation";
    case MapInvariant::Disconnected: return "disconnected";
    case MapInvariant::NonPlanar: return "genus-nonzero";
  }
  return "unknown";
}

MapValidationError::MapValidationError(MapInvariant inv, const std::string& detail)
    : std::runtime_error(std::string(invariant_name(inv)) + ": " + detail), invariant_(inv) {}

namespace {

bool is_permutation_array(const std::vector<Dart>& p) {
  std::vector<char> seen(p.size(), 0);
  for (Dart d : p) {
    if (d < 0 || static_cast<std::size_t>(d) >= p.size() || seen[static_cast<std::size_t>(d)]) {
      return false;
    }
    seen[static_cast<std::size_t>(d)] = 1;
  }
  return true;
}

template <typename Next>
Orbits orbits_of(std::size_t n, Next next) {
  Orbits o;
  o.orbit_of.assign(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (o.orbit_of[start] != -1) continue;
    const int id = static_cast<int>(o.cycles.size());
    std::vector<Dart> cycle;
    Dart d = static_cast<Dart>(start);
    do {
      o.orbit_of[static_cast<std::size_t>(d)] = id;
      cycle.push_back(d);
      d = next(d);
    } while (d != static_cast<Dart>(start));
    o.cycles.push_back(std::move(cycle));
  }
  return o;
}

}  // namespace

CombinatorialMap::CombinatorialMap(std::vector<Dart> alpha, std::vector<Dart> sigma)
    : alpha_(std::move(alpha)), sigma_(std::move(sigma)) {
  if (alpha_.size() != sigma_.size()) {
    throw MapValidationError(MapInvariant::LengthMismatch,
                             "alpha has " + std::to_string(alpha_.size()) + " entries, sigma has " +
                                 std::to_string(sigma_.size()));
  }
  if (!is_permutation_array(alpha_)) {
    throw MapValidationError(MapInvariant::NotPermutation, "alpha is not a permutation");
  }
  if (!is_permutation_array(sigma_)) {
    throw MapValidationError(MapInvariant::NotPermutation, "sigma is not a permutation");
  }
  sigma_inv_.assign(sigma_.size(), 0);
  for (std::size_t d = 0; d < sigma_.size(); ++d) {
    sigma_inv_[static_cast<std::size_t>(sigma_[d])] = static_cast<Dart>(d);
  }
}

Dart CombinatorialMap::sigma_inv(Dart d) const { return sigma_inv_[static_cast<std::size_t>(d)]; }

Orbits vertex_orbits(const CombinatorialMap& m) {
  return orbits_of(m.dart_count(), [&](Dart d) { return m.sigma(d); });
}

Orbits face_orbits(const CombinatorialMap& m) {
  return orbits_of(m.dart_count(), [&](Dart d) { return m.phi(d); });
}

std::vector<Dart> edge_representatives(const CombinatorialMap& m) {
  std::vector<Dart> reps;
  for (Dart d = 0; static_cast<std::size_t>(d) < m.dart_count(); ++d) {
    if (d < m.alpha(d)) reps.push_back(d);
  }
  return reps;
}

int SkeletonCensus::vertices_of_degree(int n) const {
  auto it = degree_counts.find(n);
  return it == degree_counts.end() ? 0 : it->second;
}

int SkeletonCensus::faces_of_size(int n) const {
  auto it = face_counts.find(n);
  return it == face_counts.end() ? 0 : it->second;
}

int SkeletonCensus::min_degree() const {
  return degree_counts.empty() ? 0 : degree_counts.begin()->first;
}

int SkeletonCensus::min_face() const {
  return face_counts.empty() ? 0 : face_counts.begin()->first;
}

bool SkeletonCensus::is_regular(int k) const {
  return degree_counts.size() == 1 && degree_counts.begin()->first == k;
}

SkeletonCensus census_of(const CombinatorialMap& m) {
  SkeletonCensus c;
  const Orbits verts = vertex_orbits(m);
  const Orbits faces = face_orbits(m);
  c.V = static_cast<int>(verts.size());
  c.E = static_cast<int>(m.dart_count() / 2);
  c.F = static_cast<int>(faces.size());
  for (const auto& cyc : verts.cycles) ++c.degree_counts[static_cast<int>(cyc.size())];
  for (const auto& cyc : faces.cycles) ++c.face_counts[static_cast<int>(cyc.size())];
  return c;
}

SkeletonCensus validate_map(const CombinatorialMap& m) {
  const std::size_t n = m.dart_count();
  if (n == 0) throw MapValidationError(MapInvariant::Disconnected, "map has no darts");
  for (Dart d = 0; static_cast<std::size_t>(d) < n; ++d) {
    if (m.alpha(d) == d) {
      throw MapValidationError(MapInvariant::FixedDart, "alpha fixes dart " + std::to_string(d));
    }
  }
  for (Dart d = 0; static_cast<std::size_t>(d) < n; ++d) {
    if (m.alpha(m.alpha(d)) != d) {
      throw MapValidationError(MapInvariant::InvolutionViolation,
                               "alpha(alpha(" + std::to_string(d) + ")) != " + std::to_string(d));
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Dart d = stack.back();
    stack.pop_back();
    for (Dart e : {m.alpha(d), m.sigma(d), m.sigma_inv(d)}) {
      if (!seen[static_cast<std::size_t>(e)]) {
        seen[static_cast<std::size_t>(e)] = 1;
        ++reached;
        stack.push_back(e);
      }
    }
  }
  if (reached != n) {
    throw MapValidationError(MapInvariant::Disconnected,
                             std::to_string(n - reached) + " darts unreachable from dart 0");
  }
  SkeletonCensus c = census_of(m);
  if (c.V - c.E + c.F != 2) {
    throw MapValidationError(MapInvariant::NonPlanar,
                             "V - E + F = " + std::to_string(c.V - c.E + c.F) + ", expected 2");
  }
  return c;
}

bool is_polyhedral(const SkeletonCensus& c) { return c.min_degree() >= 3 && c.min_face() >= 3; }

CombinatorialMap map_from_rotation(const std::vector<std::vector<int>>& rotation) {
  const int nv = static_cast<int>(rotation.size());
  std::vector<int> offset(static_cast<std::size_t>(nv) + 1, 0);
  for (int v = 0; v < nv; ++v) {
    offset[static_cast<std::size_t>(v) + 1] =
        offset[static_cast<std::size_t>(v)] + static_cast<int>(rotation[static_cast<std::size_t>(v)].size());
  }
  const auto total = static_cast<std::size_t>(offset.back());
  std::vector<Dart> alpha(total, -1);
  std::vector<Dart> sigma(total, -1);
  auto dart_towards = [&](int u, int w) -> Dart {
    const auto& nb = rotation[static_cast<std::size_t>(u)];
    auto it = std::find(nb.begin(), nb.end(), w);
    if (it == nb.end()) {
      throw InvalidArgument("map_from_rotation: " + std::to_string(w) + " lists " + std::to_string(u) +
                            " but not conversely");
    }
    return offset[static_cast<std::size_t>(u)] + static_cast<int>(it - nb.begin());
  };
  for (int v = 0; v < nv; ++v) {
    const auto& nb = rotation[static_cast<std::size_t>(v)];
    const int k = static_cast<int>(nb.size());
    for (int i = 0; i < k; ++i) {
      const Dart d = offset[static_cast<std::size_t>(v)] + i;
      sigma[static_cast<std::size_t>(d)] = offset[static_cast<std::size_t>(v)] + (i + 1) % k;
      const int w = nb[static_cast<std::size_t>(i)];
      if (w < 0 || w >= nv || w == v) throw InvalidArgument("map_from_rotation: bad neighbour");
      alpha[static_cast<std::size_t>(d)] = dart_towards(w, v);
    }
  }
  return CombinatorialMap(std::move(alpha), std::move(sigma));
}

}  // namespace hypvol
