#include "hypvol/poly_bounds.hpp"

#include <string>

#include "hypvol/errors.hpp"
#include "hypvol/map_ops.hpp"

namespace hypvol {
namespace {

using R = Rational;

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

void require_irp_census(const SkeletonCensus& c, const char* what) {
  require(!c.face_counts.empty(), std::string(what) + ": empty census");
  require(c.is_regular(4), std::string(what) + ": census is not 4-regular");
}

}  // namespace

LinearForm atkinson_mixed_bound(int V3, int V4) {
  require(V3 >= 0 && V4 >= 0, "atkinson_mixed_bound: vertex counts must be nonnegative");
  require(V3 + V4 >= 4, "atkinson_mixed_bound: need at least 4 vertices");
  return LinearForm::voct(R(2 * V4 + 3 * V3 - 2, 4)) + LinearForm::vtet(R(15 * V3 + 20 * V4, 16));
}

IrpBounds irp_bounds(int V) {
  require(V >= 6, "irp_bounds: an ideal right-angled polyhedron has at least 6 vertices");
  IrpBounds b;
  b.lower = LinearForm::voct(R(V, 4) - R(1, 2));
  R shift(2);
  if (V > 24) {
    shift = R(3);
  } else if (V >= 8) {
    shift = R(5, 2);
  }
  b.upper = LinearForm::voct(R(V, 2) - shift);
  return b;
}

LinearForm edge_count_bound(int E, bool is_tetrahedron) {
  require(E >= 6, "edge_count_bound: a polyhedron has at least 6 edges");
  if (is_tetrahedron) return LinearForm::voct();
  const R shift = E > 24 ? R(3) : R(5, 2);
  return LinearForm::voct(R(E, 2) - shift);
}

LinearForm face_census_bound(const SkeletonCensus& census) {
  require_irp_census(census, "face_census_bound");
  LinearForm sum;
  for (auto [n, count] : census.face_counts) sum += LinearForm::lob(n, R(static_cast<std::int64_t>(n) * count));
  return sum - LinearForm::vtet(4);
}

LinearForm face_census_log_bound(const SkeletonCensus& census) {
  require_irp_census(census, "face_census_log_bound");
  LinearForm sum;
  for (auto [n, count] : census.face_counts) sum += LinearForm::pi_log_half(n, R(count));
  return sum - LinearForm::vtet(4);
}

LinearForm irp_triangle_bound(int V, int p3) {
  require(V >= 6, "irp_triangle_bound: need V >= 6");
  require(p3 >= 8, "irp_triangle_bound: an ideal right-angled polyhedron has at least 8 triangles");
  const R shift = V > 24 ? R(p3 + 13, 4) : R(p3 + 8, 4);
  return LinearForm::vtet(R(2) * (R(V) - shift));
}

LinearForm edge_triangle_bound(int E, int V3, int p3, bool all_trivalent) {
  require(E >= 6, "edge_triangle_bound: need E >= 6");
  require(V3 >= 0 && p3 >= 0, "edge_triangle_bound: counts must be nonnegative");
  require(3 * V3 <= 2 * E, "edge_triangle_bound: V3 exceeds 2E/3");
  require(3 * p3 <= 2 * E, "edge_triangle_bound: p3 exceeds 2E/3");
  if (all_trivalent) {
    require((2 * E) % 3 == 0, "edge_triangle_bound: all-trivalent needs 2E divisible by 3");
    return LinearForm::vtet(R(5, 3) * (R(E) - R(3 * p3 + 24, 10)));
  }
  return LinearForm::vtet(R(2) * (R(E) - R(p3 + V3 + 8, 4)));
}

LinearForm prism_atkinson_bound(int n) {
  require(n >= 3, "prism_atkinson_bound: need n >= 3");
  return LinearForm::voct(R(3 * n, 2) - R(2));
}

double prism_crossover() {
  // (3/2) v_oct n - 2 v_oct > 5 v_tet n - 4 v_tet
  const LinearForm num = LinearForm::voct(2) - LinearForm::vtet(4);
  const LinearForm den = LinearForm::voct(R(3, 2)) - LinearForm::vtet(5);
  return num.value() / den.value();
}

TrivalentThreshold trivalent_threshold() {
  // (5/3) v_tet (E - (3 p3 + 24)/10) < (v_oct/2) E - 3 v_oct
  const LinearForm slope = LinearForm::voct(R(1, 2)) - LinearForm::vtet(R(5, 3));
  const LinearForm p3_term = LinearForm::vtet(R(1, 2));
  const LinearForm constant = LinearForm::voct(3) - LinearForm::vtet(4);
  return {p3_term.value() / slope.value(), constant.value() / slope.value()};
}

BoundReport rectification_bounds(const CombinatorialMap& m) {
  const SkeletonCensus c = validate_map(m);
  if (!is_polyhedral(c)) throw InvalidArgument("rectification_bounds: map is not a polyhedral skeleton");
  if (!is_three_connected(m)) throw InvalidArgument("rectification_bounds: skeleton is not 3-connected");

  BoundReport r;
  const bool tetrahedron = c.V == 4 && c.E == 6;
  const int V3 = c.vertices_of_degree(3);
  const int V4 = c.vertices_of_degree(4);
  const int p3 = c.faces_of_size(3);
  const bool all_trivalent = c.is_regular(3);

  std::vector<std::string> hyp{"3-connected"};
  if (tetrahedron) hyp.push_back("tetrahedron");
  else hyp.push_back(c.E > 24 ? "E>24" : "E>=6");
  r.bounds.push_back(Bound::make("edge-count", BoundKind::Upper, edge_count_bound(c.E, tetrahedron), hyp,
                                 "rectification volume bound in terms of the number of edges"));

  r.bounds.push_back(Bound::make("edge-triangle-vertex", BoundKind::Upper,
                                 edge_triangle_bound(c.E, V3, p3, false), {"3-connected"},
                                 "edge, trivalent-vertex and triangle count bound via the medial IRP"));
  const std::string trivalent_cite = "edge and triangle count bound for all-trivalent skeletons";
  if (all_trivalent) {
    r.bounds.push_back(Bound::make("edge-triangle-trivalent", BoundKind::Upper,
                                   edge_triangle_bound(c.E, V3, p3, true), {"3-connected", "all-trivalent"},
                                   trivalent_cite));
  } else {
    r.bounds.push_back(Bound::not_applicable("edge-triangle-trivalent", BoundKind::Upper,
                                             {"3-connected", "all-trivalent"}, trivalent_cite,
                                             "skeleton has a vertex of degree other than 3"));
  }

  const std::string atkinson_cite = "Atkinson, non-obtuse polyhedra with 3- and 4-valent vertices";
  if (V3 + V4 == c.V) {
    r.bounds.push_back(Bound::make("atkinson", BoundKind::Upper, atkinson_mixed_bound(V3, V4),
                                   {"non-obtuse", "degrees-3-4"}, atkinson_cite));
  } else {
    r.bounds.push_back(Bound::not_applicable("atkinson", BoundKind::Upper, {"non-obtuse", "degrees-3-4"},
                                             atkinson_cite, "skeleton has a vertex of degree above 4"));
  }

  const CombinatorialMap med = medial(m);
  const SkeletonCensus mc = census_of(med);
  const IrpBounds irp = irp_bounds(mc.V);
  std::string irp_range = mc.V > 24 ? "V>24" : (mc.V >= 8 ? "V>=8" : "V>=6");
  r.bounds.push_back(Bound::make("medial-irp-lower", BoundKind::Lower, irp.lower,
                                 {"rectification", "ideal-right-angled"},
                                 "Atkinson lower bound for ideal right-angled polyhedra, on the medial"));
  r.bounds.push_back(Bound::make("medial-irp-upper", BoundKind::Upper, irp.upper,
                                 {"rectification", "ideal-right-angled", irp_range},
                                 "vertex-count upper bound for ideal right-angled polyhedra (tightened for V>=8 and V>24), on the medial"));
  r.bounds.push_back(Bound::make("medial-face-lobachevsky", BoundKind::Upper, face_census_bound(mc),
                                 {"rectification", "ideal-right-angled"},
                                 "regular bipyramid decomposition over the medial face census"));
  r.bounds.push_back(Bound::make("medial-face-log", BoundKind::Upper, face_census_log_bound(mc),
                                 {"rectification", "ideal-right-angled"},
                                 "logarithmic bipyramid bound over the medial face census"));
  r.bounds.push_back(Bound::make("medial-irp-triangle", BoundKind::Upper,
                                 irp_triangle_bound(mc.V, mc.faces_of_size(3)),
                                 {"rectification", "ideal-right-angled", mc.V > 24 ? "V>24" : "V>=6"},
                                 "vertex and triangle count bound for ideal right-angled polyhedra, on the medial"));
  if (mc.V == 8) {
    r.warn("medial has 8 vertices: the V>=8 and E=8 upper bounds give 3/2 v_oct, "
           "below the volume of A(4), the only ideal right-angled polyhedron with 8 vertices");
  }
  r.select_best();
  return r;
}

}  // namespace hypvol
