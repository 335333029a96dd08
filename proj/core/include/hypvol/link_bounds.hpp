#pragma once

#include <map>
#include <optional>

#include "hypvol/bound.hpp"
#include "hypvol/exact_form.hpp"
#include "hypvol/twist.hpp"

namespace hypvol {

LinearForm adams_crossing_bound(int c, bool is_figure_eight);
LinearForm adams_octahedral_bound(int c);
LinearForm agol_thurston_bound(int t);
LinearForm dasbach_tsvietkova_bound(const TwistStats& s);

// Adams' refinement. The case index (1..5) selects the constant a.
int adams_twist_case(const TwistStats& s);
LinearForm adams_twist_constant(int which);
LinearForm adams_twist_bound(const TwistStats& s);

// The same bound with six-digit decimal constants for every coefficient.
Rational adams_twist_decimal_constant(int which);
LinearForm adams_twist_decimal_bound(const TwistStats& s);

// 10 v_tet (t - 1.4), for diagrams with more than 8 twists.
LinearForm twist_count_bound(int t);
// 10 v_tet (t - 1.3 - delta/10) when P has delta + 2t triangles.
LinearForm twist_count_refined_bound(int t, int delta);

LinearForm fkp_lower_bound(int t, int min_twist_length);

struct LinkBoundPair {
  LinearForm lower;
  LinearForm upper;
};

LinkBoundPair two_bridge_bounds(int t);

// Dasbach-Lin bounds from the second and penultimate Jones coefficients.
LinkBoundPair jones_bounds(int abs_a_second, int abs_a_penultimate);

LinearForm white_face_corollary_bound(int t, const std::map<int, int>& white_census);

struct LinkFlags {
  bool alternating = false;
  bool reduced = false;
  bool not_figure_eight = false;
  bool not_borromean = false;
  bool two_bridge = false;
};

struct JonesCoefficients {
  int abs_second = 0;
  int abs_penultimate = 0;
};

BoundReport link_report(const TwistDecomposition& d, const LinkFlags& flags,
                        const std::optional<std::map<int, int>>& white_census = std::nullopt,
                        const std::optional<JonesCoefficients>& jones = std::nullopt);

}  // namespace hypvol
