#include "hypvol/lobachevsky.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hypvol/errors.hpp"

namespace hypvol {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTerms = 48;

// c_n = zeta(2n) / (n (2n+1) (2 pi)^(2n)), the Taylor coefficients of
// Cl_2(x) - x + x ln|x|.
const std::array<double, kTerms + 1>& clausen_coefficients() {
  static const std::array<double, kTerms + 1> coeffs = [] {
    std::array<double, kTerms + 1> c{};
    const double two_pi_sq = 4.0 * kPi * kPi;
    double scale = 1.0;
    for (int n = 1; n <= kTerms; ++n) {
      scale *= two_pi_sq;
      const double zeta = std::riemann_zeta(2.0 * n);
      c[n] = zeta / (n * (2.0 * n + 1.0) * scale);
    }
    return c;
  }();
  return coeffs;
}

// Clausen function Cl_2 on [-pi, pi]; the power series ratio is at most 1/4.
double clausen2(double x) {
  if (x == 0.0) return 0.0;
  const auto& c = clausen_coefficients();
  const double x2 = x * x;
  double power = x;
  double sum = 0.0;
  for (int n = 1; n <= kTerms; ++n) {
    power *= x2;
    const double term = c[n] * power;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(x)) break;
  }
  return x - x * std::log(std::abs(x)) + sum;
}

void require_at_least(int n, int min, const char* what) {
  if (n < min) {
    throw InvalidArgument(std::string(what) + ": n must be at least " + std::to_string(min) +
                          ", got " + std::to_string(n));
  }
}

}  // namespace

double lobachevsky(double theta) {
  if (!std::isfinite(theta)) throw InvalidArgument("lobachevsky: angle must be finite");
  // reduce to (-pi/2, pi/2]
  double r = theta - kPi * std::round(theta / kPi);
  if (r <= -kPi / 2) r += kPi;
  if (r > kPi / 2) r -= kPi;
  return 0.5 * clausen2(2.0 * r);
}

double lobachevsky_pi_over(int n) {
  if (n < 1) throw InvalidArgument("lobachevsky_pi_over: n must be positive");
  return lobachevsky(kPi / n);
}

double v_tet() {
  static const double value = 3.0 * lobachevsky(kPi / 3.0);
  return value;
}

double v_oct() {
  static const double value = 8.0 * lobachevsky(kPi / 4.0);
  return value;
}

double ideal_tetrahedron_Tn_volume(int n) {
  require_at_least(n, 3, "ideal_tetrahedron_Tn_volume");
  return 2.0 * lobachevsky_pi_over(n);
}

double regular_bipyramid_volume(int n) {
  require_at_least(n, 3, "regular_bipyramid_volume");
  return 2.0 * n * lobachevsky_pi_over(n);
}

double bipyramid_log_bound(int n) {
  require_at_least(n, 3, "bipyramid_log_bound");
  return 2.0 * kPi * std::log(n / 2.0);
}

double antiprism_volume(int n) {
  require_at_least(n, 3, "antiprism_volume");
  const double shift = kPi / (2.0 * n);
  return 2.0 * n * (lobachevsky(kPi / 4 + shift) + lobachevsky(kPi / 4 - shift));
}

double twisted_antiprism_volume(int n) {
  require_at_least(n, 4, "twisted_antiprism_volume");
  return antiprism_volume(n - 1) + antiprism_volume(3);
}

}  // namespace hypvol
