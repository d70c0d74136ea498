// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace skge::disk {

// Dirichlet data on a circle: solution values sampled at M equispaced
// angles theta_j = 2 pi j / M on the circle of radius rho_tilde around
// (center_x, center_y).
struct DiskProblem {
  double center_x = 0.0;
  double center_y = 0.0;
  double rho_tilde = 1.0;
  double r = 0.0;
  std::vector<double> boundary_values;
};

// Samples psi(theta) at M equispaced angles. M must be even, at least 8,
// and at most 400 (the attenuation factors are computed per mode up to
// order M/2); r rho_tilde must stay under the overflow guard of the
// modified Bessel evaluation.
DiskProblem make_disk_problem(double center_x, double center_y,
                              double rho_tilde, double r,
                              const std::function<double(double)>& psi,
                              std::size_t M);

// Separated-variables solution at polar offset (rho, theta) from the
// center: the Fourier modes of the sampled data, each attenuated by
// I_n(r rho) / I_n(r rho_tilde) ((rho/rho_tilde)^n when r = 0). Modes are
// cut once the geometric bound on the dropped remainder falls below tol;
// the sample count caps the order at M/2, past which the data carries no
// information. Requires 0 <= rho <= rho_tilde.
double disk_solution(const DiskProblem& p, double rho, double theta,
                     double tol);

// Mean-value identity: any solution V of the operator satisfies
//   avg_theta V(c + R e^{i theta}) = V(c) I_0(r R)
// on every circle contained in the domain. The average uses the
// samples-point trapezoid rule, spectrally accurate for smooth fields.
// This is a field-level validity check that needs no reference solution.
struct MeanValueReport {
  double circle_average = 0.0;
  double predicted = 0.0;    // V(center) * I_0(r R)
  double discrepancy = 0.0;  // |average - predicted|
  bool pass = false;
};
MeanValueReport mean_value_check(
    const std::function<double(double, double)>& field, double center_x,
    double center_y, double radius, double r, double tol,
    std::size_t samples = 256);

}  // namespace skge::disk
