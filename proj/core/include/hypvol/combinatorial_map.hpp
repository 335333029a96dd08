#pragma once

#include <cstddef>
#include <map>
#include <vector>

namespace hypvol {

using Dart = int;

// Planar embedding by darts: alpha pairs the two halves of an edge, sigma
// rotates counterclockwise around a vertex, faces are orbits of
// phi = sigma . alpha. Construction does not validate; use validate_map.
class CombinatorialMap {
 public:
  CombinatorialMap() = default;
  CombinatorialMap(std::vector<Dart> alpha, std::vector<Dart> sigma);

  std::size_t dart_count() const { return alpha_.size(); }
  Dart alpha(Dart d) const { return alpha_[static_cast<std::size_t>(d)]; }
  Dart sigma(Dart d) const { return sigma_[static_cast<std::size_t>(d)]; }
  Dart phi(Dart d) const { return sigma(alpha(d)); }
  Dart sigma_inv(Dart d) const;

  const std::vector<Dart>& alpha_array() const { return alpha_; }
  const std::vector<Dart>& sigma_array() const { return sigma_; }

  friend bool operator==(const CombinatorialMap&, const CombinatorialMap&) = default;

 private:
  std::vector<Dart> alpha_;
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
};

// Cycles of a permutation, listed in order of their minimal dart and each
// starting at that dart.
struct Orbits {
  std::vector<std::vector<Dart>> cycles;
  std::vector<int> orbit_of;  // dart -> cycle index

  std::size_t size() const { return cycles.size(); }
};

Orbits vertex_orbits(const CombinatorialMap& m);
Orbits face_orbits(const CombinatorialMap& m);

// Edges listed by their smaller dart, in increasing order.
std::vector<Dart> edge_representatives(const CombinatorialMap& m);

struct SkeletonCensus {
  int V = 0;
  int E = 0;
  int F = 0;
  std::map<int, int> degree_counts;
  std::map<int, int> face_counts;

  int vertices_of_degree(int n) const;
  int faces_of_size(int n) const;
  int min_degree() const;
  int min_face() const;
  bool is_regular(int k) const;

  friend bool operator==(const SkeletonCensus&, const SkeletonCensus&) = default;
};

// Checks every map invariant and returns the census, or throws
// MapValidationError naming the violated invariant.
SkeletonCensus validate_map(const CombinatorialMap& m);

// Census without validation, for maps already known to be valid.
SkeletonCensus census_of(const CombinatorialMap& m);

bool is_polyhedral(const SkeletonCensus& c);

// Builds a map from counterclockwise neighbour lists of a simple graph.
// rotation[v] lists the neighbours of v in counterclockwise order.
CombinatorialMap map_from_rotation(const std::vector<std::vector<int>>& rotation);

}  // namespace hypvol
