#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "hypvol/errors.hpp"
#include "hypvol/families.hpp"
#include "hypvol/map_ops.hpp"

using namespace hypvol;

namespace {

void expect_invariant(const CombinatorialMap& m, MapInvariant inv) {
  try {
    validate_map(m);
    ADD_FAILURE() << "expected " << invariant_name(inv);
  } catch (const MapValidationError& e) {
    EXPECT_EQ(e.invariant(), inv) << e.what();
  }
}

struct Family {
  const char* name;
  int min_n;
  std::function<CombinatorialMap(int)> build;
};

const std::vector<Family>& families() {
  static const std::vector<Family> all{
      {"pyramid", 3, pyramid},     {"bipyramid", 3, bipyramid},
      {"prism", 3, prism},         {"antiprism", 3, antiprism},
      {"two_apex_pyramid", 4, two_apex_pyramid}, {"twisted_antiprism", 4, twisted_antiprism},
  };
  return all;
}

CombinatorialMap shuffled(const CombinatorialMap& m, std::mt19937& rng) {
  std::vector<Dart> perm(m.dart_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel_darts(m, perm);
}

// two triangles glued along an edge: vertices 0 and 2 separate 1 from 3
CombinatorialMap diamond() {
  return map_from_rotation({{1, 2, 3}, {2, 0}, {3, 0, 1}, {0, 2}});
}

}  // namespace

TEST(ValidateMap, TetrahedronCensus) {
  const SkeletonCensus c = validate_map(tetrahedron());
  EXPECT_EQ(c.V, 4);
  EXPECT_EQ(c.E, 6);
  EXPECT_EQ(c.F, 4);
  EXPECT_EQ(c.vertices_of_degree(3), 4);
  EXPECT_EQ(c.faces_of_size(3), 4);
}

TEST(ValidateMap, DistinctErrors) {
  expect_invariant(CombinatorialMap({0, 1}, {1, 0}), MapInvariant::FixedDart);
  expect_invariant(CombinatorialMap({1, 2, 0}, {0, 1, 2}), MapInvariant::InvolutionViolation);
  // two disjoint triangles
  std::vector<Dart> alpha, sigma;
  for (int base : {0, 6}) {
    for (int v = 0; v < 3; ++v) {
      // vertex v owns darts base+2v (to v+1) and base+2v+1 (to v-1)
      alpha.push_back(base + 2 * ((v + 1) % 3) + 1);
      alpha.push_back(base + 2 * ((v + 2) % 3));
      sigma.push_back(base + 2 * v + 1);
      sigma.push_back(base + 2 * v);
    }
  }
  const CombinatorialMap one(std::vector<Dart>(alpha.begin(), alpha.begin() + 6),
                             std::vector<Dart>(sigma.begin(), sigma.begin() + 6));
  EXPECT_EQ(validate_map(one).F, 2);
  expect_invariant(CombinatorialMap(alpha, sigma), MapInvariant::Disconnected);
  // K4 with a rotation that does not come from a planar drawing
  const CombinatorialMap torus = map_from_rotation({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
  expect_invariant(torus, MapInvariant::NonPlanar);
}

TEST(ValidateMap, ConstructorRejectsBadArrays) {
  try {
    CombinatorialMap({1, 0}, {0});
    ADD_FAILURE();
  } catch (const MapValidationError& e) {
    EXPECT_EQ(e.invariant(), MapInvariant::LengthMismatch);
  }
  try {
    CombinatorialMap({1, 1}, {0, 1});
    ADD_FAILURE();
  } catch (const MapValidationError& e) {
    EXPECT_EQ(e.invariant(), MapInvariant::NotPermutation);
  }
}

TEST(Families, DocumentedCensuses) {
  SkeletonCensus c = validate_map(pyramid(4));
  EXPECT_EQ(c.V, 5);
  EXPECT_EQ(c.E, 8);
  EXPECT_EQ(c.F, 5);
  EXPECT_EQ(c.vertices_of_degree(3), 4);
  EXPECT_EQ(c.faces_of_size(3), 4);

  c = validate_map(prism(3));
  EXPECT_EQ(c.V, 6);
  EXPECT_EQ(c.E, 9);
  EXPECT_EQ(c.F, 5);
  EXPECT_TRUE(c.is_regular(3));
  EXPECT_EQ(c.faces_of_size(3), 2);

  c = validate_map(two_apex_pyramid(6));
  EXPECT_EQ(c.E, 13);
  EXPECT_EQ(c.vertices_of_degree(3), 7);
  EXPECT_EQ(c.faces_of_size(3), 4);

  c = validate_map(twisted_antiprism(6));
  EXPECT_EQ(c.V, 13);
  EXPECT_TRUE(c.is_regular(4));
  EXPECT_EQ(c.faces_of_size(6), 1);
  EXPECT_EQ(c.faces_of_size(5), 1);
  EXPECT_EQ(c.faces_of_size(4), 2);
  EXPECT_EQ(c.faces_of_size(3), 11);

  c = validate_map(bipyramid(5));
  EXPECT_EQ(c.V, 7);
  EXPECT_EQ(c.faces_of_size(3), 10);
  EXPECT_EQ(c.vertices_of_degree(5), 2);

  EXPECT_EQ(validate_map(cube()).faces_of_size(4), 6);
  EXPECT_EQ(validate_map(octahedron()).faces_of_size(3), 8);
}

TEST(Families, RejectSmallN) {
  EXPECT_THROW(pyramid(2), InvalidArgument);
  EXPECT_THROW(bipyramid(2), InvalidArgument);
  EXPECT_THROW(prism(2), InvalidArgument);
  EXPECT_THROW(antiprism(2), InvalidArgument);
  EXPECT_THROW(two_apex_pyramid(3), InvalidArgument);
  EXPECT_THROW(twisted_antiprism(3), InvalidArgument);
}

TEST(Families, HandshakeEulerAndThreeConnected) {
  for (const auto& fam : families()) {
    for (int n = fam.min_n; n <= 12; ++n) {
      const CombinatorialMap m = fam.build(n);
      const SkeletonCensus c = validate_map(m);
      int deg = 0, face = 0;
      for (auto [k, cnt] : c.degree_counts) deg += k * cnt;
      for (auto [k, cnt] : c.face_counts) face += k * cnt;
      EXPECT_EQ(deg, 2 * c.E) << fam.name << n;
      EXPECT_EQ(face, 2 * c.E) << fam.name << n;
      EXPECT_EQ(c.V - c.E + c.F, 2) << fam.name << n;
      EXPECT_TRUE(is_polyhedral(c)) << fam.name << n;
      EXPECT_TRUE(is_three_connected(m)) << fam.name << n;
    }
  }
}

TEST(ThreeConnected, Examples) {
  EXPECT_TRUE(is_three_connected(tetrahedron()));
  EXPECT_TRUE(is_three_connected(cube()));
  EXPECT_FALSE(is_three_connected(diamond()));
  const CombinatorialMap triangle = map_from_rotation({{1, 2}, {2, 0}, {0, 1}});
  EXPECT_THROW(is_three_connected(triangle), InvalidArgument);
}

TEST(Medial, TetrahedronIsOctahedron) {
  const CombinatorialMap med = medial(tetrahedron());
  const SkeletonCensus c = validate_map(med);
  EXPECT_EQ(c.V, 6);
  EXPECT_TRUE(c.is_regular(4));
  EXPECT_EQ(c.faces_of_size(3), 8);
  EXPECT_TRUE(maps_isomorphic(med, octahedron()));
}

TEST(Medial, PyramidFourIsAntiprismFour) {
  EXPECT_TRUE(maps_isomorphic(medial(pyramid(4)), antiprism(4)));
}

TEST(Medial, PyramidsGiveAntiprisms) {
  for (int n = 3; n <= 10; ++n) EXPECT_TRUE(maps_isomorphic(medial(pyramid(n)), antiprism(n))) << n;
}

TEST(Medial, CubeIsQ14) {
  const SkeletonCensus c = validate_map(medial(cube()));
  EXPECT_EQ(c.V, 12);
  EXPECT_EQ(c.F, 14);
  EXPECT_EQ(c.faces_of_size(3), 8);
  EXPECT_EQ(c.faces_of_size(4), 6);
}

TEST(Medial, TwoApexPyramidIsTwistedAntiprism) {
  for (int n = 4; n <= 10; ++n) {
    EXPECT_TRUE(maps_isomorphic(medial(two_apex_pyramid(n)), twisted_antiprism(n))) << n;
  }
  // W_4 is the triangular prism
  EXPECT_TRUE(maps_isomorphic(two_apex_pyramid(4), prism(3)));
}

TEST(Medial, CountsAndFacesForAllBuilders) {
  for (const auto& fam : families()) {
    for (int n = std::max(3, fam.min_n); n <= 12; ++n) {
      const CombinatorialMap m = fam.build(n);
      const SkeletonCensus c = validate_map(m);
      const SkeletonCensus mc = validate_map(medial(m));
      EXPECT_EQ(mc.V, c.E) << fam.name << n;
      EXPECT_EQ(mc.E, 2 * c.E) << fam.name << n;
      EXPECT_EQ(mc.F, c.V + c.F) << fam.name << n;
      EXPECT_TRUE(mc.is_regular(4)) << fam.name << n;
      // one k-gon per degree-k vertex and one n-gon per n-gonal face
      std::map<int, int> expected = c.face_counts;
      for (auto [k, cnt] : c.degree_counts) expected[k] += cnt;
      EXPECT_EQ(mc.face_counts, expected) << fam.name << n;
      // ideal right-angled triangle identity
      int rhs = 8;
      for (auto [k, cnt] : mc.face_counts) {
        if (k >= 5) rhs += (k - 4) * cnt;
      }
      EXPECT_EQ(mc.faces_of_size(3), rhs) << fam.name << n;
    }
  }
}

TEST(Dual, ClassicalPairs) {
  EXPECT_TRUE(maps_isomorphic(dual(cube()), octahedron()));
  EXPECT_TRUE(maps_isomorphic(dual(tetrahedron()), tetrahedron()));
  EXPECT_TRUE(maps_isomorphic(dual(prism(5)), bipyramid(5)));
  EXPECT_EQ(dual(dual(cube())), cube());
  EXPECT_TRUE(maps_isomorphic(medial(cube()), medial(dual(cube()))));
}

TEST(Isomorphism, Basics) {
  EXPECT_TRUE(maps_isomorphic(tetrahedron(), tetrahedron()));
  EXPECT_FALSE(maps_isomorphic(tetrahedron(), cube()));
  EXPECT_FALSE(maps_isomorphic(prism(6), antiprism(6)));
  EXPECT_TRUE(maps_isomorphic(cube(), mirror(cube())));
}

TEST(Isomorphism, EquivalenceOnCorpusAndRelabelling) {
  std::mt19937 rng(7);
  std::vector<CombinatorialMap> corpus;
  for (const auto& fam : families()) {
    for (int n = fam.min_n; n <= fam.min_n + 3; ++n) corpus.push_back(fam.build(n));
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_TRUE(maps_isomorphic(corpus[i], shuffled(corpus[i], rng))) << i;
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      const bool ij = maps_isomorphic(corpus[i], corpus[j]);
      EXPECT_EQ(ij, maps_isomorphic(corpus[j], corpus[i])) << i << " " << j;
      for (std::size_t k = 0; ij && k < corpus.size(); ++k) {
        if (maps_isomorphic(corpus[j], corpus[k])) EXPECT_TRUE(maps_isomorphic(corpus[i], corpus[k]));
      }
    }
  }
}

TEST(Isomorphism, ChiralityIsIgnored) {
  // a map and its mirror image are isomorphic only through the reflection
  const CombinatorialMap m = twisted_antiprism(7);
  EXPECT_TRUE(maps_isomorphic(m, mirror(m)));
}
