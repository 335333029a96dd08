#include "hypvol/link_bounds.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <string>
#include <vector>

#include "hypvol/errors.hpp"

namespace hypvol {
namespace {

using R = Rational;

R dec(const char* text) { return R::from_decimal(text); }

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

void applies_if(bool ok, const std::string& message) {
  if (!ok) throw NotApplicable(message);
}

}  // namespace

LinearForm adams_crossing_bound(int c, bool is_figure_eight) {
  require(c >= 3, "adams_crossing_bound: need c >= 3");
  applies_if(!is_figure_eight, "adams_crossing_bound: the figure-eight knot is excluded");
  return LinearForm::vtet(R(4 * c - 16));
}

LinearForm adams_octahedral_bound(int c) {
  require(c >= 5, "adams_octahedral_bound: need c >= 5");
  return LinearForm::voct(R(c - 5)) + LinearForm::vtet(4);
}

LinearForm agol_thurston_bound(int t) {
  require(t >= 1, "agol_thurston_bound: need t >= 1");
  return LinearForm::vtet(R(10 * (t - 1)));
}

LinearForm dasbach_tsvietkova_bound(const TwistStats& s) {
  const int g4 = s.g_i(4);
  int a = 6;
  if (g4 != 0) {
    a = 10;
  } else if (s.t_i(3) != 0) {
    a = 7;
  }
  return LinearForm::vtet(R(4 * s.t_i(1) + 6 * s.t_i(2) + 8 * s.t_i(3) + 10 * g4 - a));
}

int adams_twist_case(const TwistStats& s) {
  const int g2 = s.g_i(2), g3 = s.g_i(3), g4 = s.g_i(4), g5 = s.g_i(5);
  if (g2 == 0) return 1;
  if (g3 == 0 && s.t_i(2) >= 1) return 2;
  if (g4 == 0 && s.t_i(3) >= 1) return 3;
  if (g5 == 0 && s.t_i(4) >= 1) return 4;
  if (g5 >= 1) return 5;
  assert(false && "adams twist cases are exhaustive");
  throw std::logic_error("adams_twist_case: no case matched");
}

LinearForm adams_twist_constant(int which) {
  using L = LinearForm;
  switch (which) {
    case 1: return L::voct(7) - L::vtet(10);
    case 2: return L::vtet(11);
    case 3: return L::lob(8, 32) + L::vtet(5) - L::voct(1) - L::lob(7, 14);
    case 4: return L::lob(10, 40) + L::lob(6, 12) - L::vtet(2) - L::lob(4, 8) - L::lob(9, 18);
    case 5: return L::vtet(4) + L::lob(6, 12) + L::lob(10, 60) - L::lob(9, 54);
    default: throw InvalidArgument("adams_twist_constant: case must be 1..5");
  }
}

LinearForm adams_twist_bound(const TwistStats& s) {
  applies_if(s.c >= 5, "adams_twist_bound: needs at least 5 crossings");
  applies_if(s.t >= 3, "adams_twist_bound: needs at least 3 twists");
  LinearForm sum = LinearForm::voct(R(s.t_i(1))) + LinearForm::vtet(R(6 * s.t_i(2))) +
                   LinearForm::lob(8, R(16 * s.t_i(3))) + LinearForm::lob(10, R(20 * s.t_i(4))) +
                   LinearForm::vtet(R(10 * s.g_i(5)));
  return sum - adams_twist_constant(adams_twist_case(s));
}

Rational adams_twist_decimal_constant(int which) {
  switch (which) {
    case 1: return dec("15.497263");
    case 2: return dec("11.164351");
    case 3: return dec("10.088228");
    case 4: return dec("10.287338");
    case 5: return dec("12.111063");
    default: throw InvalidArgument("adams_twist_decimal_constant: case must be 1..5");
  }
}

LinearForm adams_twist_decimal_bound(const TwistStats& s) {
  applies_if(s.c >= 5 && s.t >= 3, "adams_twist_decimal_bound: needs c >= 5 and t >= 3");
  const R total = dec("3.663863") * R(s.t_i(1)) + dec("6.089646") * R(s.t_i(2)) +
                  dec("7.854977") * R(s.t_i(3)) + dec("9.237551") * R(s.t_i(4)) +
                  dec("10.149416") * R(s.g_i(5)) - adams_twist_decimal_constant(adams_twist_case(s));
  return LinearForm(total);
}

LinearForm twist_count_bound(int t) {
  applies_if(t > 8, "twist_count_bound: needs more than 8 twists");
  return LinearForm::vtet(R(10) * (R(t) - dec("1.4")));
}

LinearForm twist_count_refined_bound(int t, int delta) {
  applies_if(t > 8, "twist_count_refined_bound: needs more than 8 twists");
  require(delta >= 0, "twist_count_refined_bound: delta must be nonnegative");
  return LinearForm::vtet(R(10) * (R(t) - dec("1.3") - R(delta, 10)));
}

LinearForm fkp_lower_bound(int t, int min_twist_length) {
  applies_if(t >= 2, "fkp_lower_bound: needs at least 2 twists");
  applies_if(min_twist_length >= 7, "fkp_lower_bound: every twist must have length at least 7");
  return LinearForm(dec("0.70735") * R(t - 1));
}

LinkBoundPair two_bridge_bounds(int t) {
  require(t >= 2, "two_bridge_bounds: need t >= 2");
  return {LinearForm::vtet(R(2 * t)) - LinearForm(dec("2.7066")), LinearForm::voct(R(2 * (t - 1)))};
}

LinkBoundPair jones_bounds(int abs_a_second, int abs_a_penultimate) {
  require(abs_a_second >= 0 && abs_a_penultimate >= 0, "jones_bounds: coefficients are absolute values");
  const int lower = std::max(abs_a_penultimate, abs_a_second - 1);
  return {LinearForm::voct(R(lower)), LinearForm::vtet(R(10 * (abs_a_second + abs_a_penultimate - 1)))};
}

LinearForm white_face_corollary_bound(int t, const std::map<int, int>& white_census) {
  require(t >= 2, "white_face_corollary_bound: need t >= 2");
  int weighted = 0;
  LinearForm sum;
  for (auto [n, f] : white_census) {
    require(n >= 3 && f >= 0, "white_face_corollary_bound: bad census entry");
    weighted += n * f;
    sum += LinearForm::lob(n, R(2 * n * f));
  }
  if (weighted != 6 * t) {
    throw CensusMismatch("white census sizes sum to " + std::to_string(weighted) + ", expected 6t = " +
                         std::to_string(6 * t));
  }
  return LinearForm::vtet(R(4 * t - 8)) + sum;
}

BoundReport link_report(const TwistDecomposition& d, const LinkFlags& flags,
                        const std::optional<std::map<int, int>>& white_census,
                        const std::optional<JonesCoefficients>& jones) {
  const TwistStats s = twist_stats(d);
  const bool reduced_alternating = flags.alternating && flags.reduced;
  BoundReport r;
  auto& out = r.bounds;

  auto upper = [&](const std::string& name, const LinearForm& f, std::vector<std::string> hyp, std::string cite) {
    out.push_back(Bound::make(name, BoundKind::Upper, f, std::move(hyp), std::move(cite)));
  };
  auto lower = [&](const std::string& name, const LinearForm& f, std::vector<std::string> hyp, std::string cite) {
    out.push_back(Bound::make(name, BoundKind::Lower, f, std::move(hyp), std::move(cite)));
  };
  auto skip = [&](const std::string& name, BoundKind kind, std::vector<std::string> hyp, std::string cite,
                  std::string why) {
    out.push_back(Bound::not_applicable(name, kind, std::move(hyp), std::move(cite), std::move(why)));
  };

  {
    const std::vector<std::string> hyp{"hyperbolic", "not-figure-eight", "c>=3"};
    const std::string cite = "Adams, crossing-number bound v_tet(4c - 16)";
    if (!flags.not_figure_eight) skip("adams-crossing", BoundKind::Upper, hyp, cite, "not-figure-eight not asserted");
    else if (s.c < 3) skip("adams-crossing", BoundKind::Upper, hyp, cite, "fewer than 3 crossings");
    else upper("adams-crossing", adams_crossing_bound(s.c, false), hyp, cite);
  }
  {
    const std::vector<std::string> hyp{"hyperbolic", "c>=5"};
    const std::string cite = "Adams, octahedral crossing-number bound v_oct(c - 5) + 4 v_tet";
    if (s.c < 5) {
      skip("adams-octahedral", BoundKind::Upper, hyp, cite, "fewer than 5 crossings");
    } else {
      upper("adams-octahedral", adams_octahedral_bound(s.c), hyp, cite);
      if (s.c == 11) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "adams-octahedral at c=11 evaluates to %.6f, not 26.078932",
                      adams_octahedral_bound(11).value());
        r.warn(buf);
      }
    }
  }
  upper("agol-thurston", agol_thurston_bound(s.t), {"hyperbolic", "t>=1"},
        "Agol-Thurston, 10 v_tet (t - 1)");
  {
    const std::vector<std::string> hyp{"hyperbolic", "reduced"};
    const std::string cite = "Dasbach-Tsvietkova, v_tet(4t_1 + 6t_2 + 8t_3 + 10g_4 - a)";
    if (flags.reduced) upper("dasbach-tsvietkova", dasbach_tsvietkova_bound(s), hyp, cite);
    else skip("dasbach-tsvietkova", BoundKind::Upper, hyp, cite, "reduced not asserted");
  }
  {
    const std::vector<std::string> hyp{"hyperbolic", "reduced-alternating", "c>=5", "t>=3", "not-borromean"};
    const std::string cite = "Adams, twist-length refinement with case constant a";
    if (!reduced_alternating) skip("adams-twist", BoundKind::Upper, hyp, cite, "reduced-alternating not asserted");
    else if (!flags.not_borromean) skip("adams-twist", BoundKind::Upper, hyp, cite, "not-borromean not asserted");
    else if (s.c < 5) skip("adams-twist", BoundKind::Upper, hyp, cite, "fewer than 5 crossings");
    else if (s.t < 3) skip("adams-twist", BoundKind::Upper, hyp, cite, "fewer than 3 twists");
    else upper("adams-twist", adams_twist_bound(s), hyp, cite);
  }
  {
    const std::vector<std::string> hyp{"hyperbolic", "t>8"};
    const std::string cite = "full augmentation without half-turns, 10 v_tet (t - 1.4)";
    if (s.t > 8) upper("twist-count", twist_count_bound(s.t), hyp, cite);
    else skip("twist-count", BoundKind::Upper, hyp, cite, "at most 8 twists");
  }
  {
    const std::vector<std::string> hyp{"hyperbolic", "t>8", "white-census"};
    const std::string cite = "full augmentation with triangle count, 10 v_tet (t - 1.3 - delta/10)";
    if (s.t <= 8) {
      skip("twist-count-refined", BoundKind::Upper, hyp, cite, "at most 8 twists");
    } else if (!white_census) {
      skip("twist-count-refined", BoundKind::Upper, hyp, cite, "no white face census supplied");
    } else {
      auto it = white_census->find(3);
      const int delta = it == white_census->end() ? 0 : it->second;
      upper("twist-count-refined", twist_count_refined_bound(s.t, delta), hyp, cite);
    }
  }
  {
    const std::vector<std::string> hyp{"hyperbolic", "white-census", "sum n f_n = 6t"};
    const std::string cite = "white face census of the augmentation polyhedron";
    if (!white_census) {
      skip("white-face", BoundKind::Upper, hyp, cite, "no white face census supplied");
    } else if (s.t < 2) {
      skip("white-face", BoundKind::Upper, hyp, cite, "fewer than 2 twists");
    } else {
      try {
        upper("white-face", white_face_corollary_bound(s.t, *white_census), hyp, cite);
      } catch (const CensusMismatch& e) {
        skip("white-face", BoundKind::Upper, hyp, cite, e.what());
      }
    }
  }
  {
    const std::vector<std::string> hyp{"hyperbolic", "reduced-alternating", "two-bridge", "t>=2"};
    const std::string cite = "Gueritaud-Futer, two-bridge bounds";
    if (reduced_alternating && flags.two_bridge && s.t >= 2) {
      const LinkBoundPair b = two_bridge_bounds(s.t);
      upper("two-bridge-upper", b.upper, hyp, cite);
      lower("two-bridge-lower", b.lower, hyp, cite);
    } else {
      const std::string why = s.t < 2 ? "fewer than 2 twists" : "reduced-alternating two-bridge not asserted";
      skip("two-bridge-upper", BoundKind::Upper, hyp, cite, why);
      skip("two-bridge-lower", BoundKind::Lower, hyp, cite, why);
    }
  }
  {
    const std::vector<std::string> hyp{"hyperbolic", "prime-alternating-non-torus-knot", "jones-coefficients"};
    const std::string cite = "Dasbach-Lin, Jones coefficient bounds; lower read as v_oct max(|a_m-1|, |a_n+1| - 1)";
    std::string why;
    if (!jones) why = "no Jones coefficients supplied";
    else if (!flags.alternating) why = "alternating not asserted";
    if (why.empty()) {
      const LinkBoundPair b = jones_bounds(jones->abs_second, jones->abs_penultimate);
      if (b.upper.value() <= 0) why = "degenerate coefficients give a nonpositive upper bound";
      else {
        upper("jones-upper", b.upper, hyp, cite);
        lower("jones-lower", b.lower, hyp, cite);
      }
    }
    if (!why.empty()) {
      skip("jones-upper", BoundKind::Upper, hyp, cite, why);
      skip("jones-lower", BoundKind::Lower, hyp, cite, why);
    }
  }
  {
    const std::vector<std::string> hyp{"hyperbolic", "reduced-alternating", "t>=2", "min-twist-length>=7"};
    const std::string cite = "Futer-Kalfagianni-Purcell, 0.70735 (t - 1)";
    if (!reduced_alternating) skip("fkp-lower", BoundKind::Lower, hyp, cite, "reduced-alternating not asserted");
    else if (s.t < 2) skip("fkp-lower", BoundKind::Lower, hyp, cite, "fewer than 2 twists");
    else if (s.min_length() < 7) skip("fkp-lower", BoundKind::Lower, hyp, cite, "a twist is shorter than 7");
    else lower("fkp-lower", fkp_lower_bound(s.t, s.min_length()), hyp, cite);
  }
  r.select_best();
  return r;
}

}  // namespace hypvol
