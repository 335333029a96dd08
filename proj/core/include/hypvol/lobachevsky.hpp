#pragma once

namespace hypvol {

// Lobachevsky function: Lambda(theta) = -int_0^theta log|2 sin t| dt.
// Absolute error below 1e-12 for every finite theta.
double lobachevsky(double theta);

// Lambda(pi / n) for integer n >= 1.
double lobachevsky_pi_over(int n);

double v_tet();
double v_oct();

double ideal_tetrahedron_Tn_volume(int n);
double regular_bipyramid_volume(int n);
double bipyramid_log_bound(int n);
double antiprism_volume(int n);
double twisted_antiprism_volume(int n);

}  // namespace hypvol
