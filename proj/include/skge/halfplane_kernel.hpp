// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#pragma once

#include "skge/report.hpp"

namespace skge::halfplane {

// Evaluation point for the half-plane kernel G(x, y; r): boundary source at
// the origin of the edge y = 0, domain y >= 0, mass parameter r >= 0.
struct HalfplaneKernelPoint {
  double x = 0;
  double y = 0;
  double r = 0;
};

// Closed form (r y / (pi d)) K1(r d), d = sqrt(x^2 + y^2); reduces to the
// Poisson kernel y / (pi (x^2 + y^2)) at r = 0. Throws singularity_error
// at the source (0, 0); returns the boundary limit 0 at y = 0.
double green_halfplane_closed(const HalfplaneKernelPoint& p);

// Fourier form (1/pi) Int_0^inf xi sin(xi y) e^{-|x| sqrt(xi^2+r^2)}
//   / sqrt(xi^2+r^2) d xi.
// For |x| >= 0.2 the integral is truncated using the e^{-|x| xi} bound and
// pre-segmented at the sine zeros; for smaller |x| (including x = 0, where
// the integrand only decays through oscillation) the half-period panels are
// summed with Euler acceleration of the alternating series.
double green_halfplane_integral(const HalfplaneKernelPoint& p, double tol);

// Verifies the Laplace-transform identity
//   Int_0^inf x sin(a x) e^{-beta sqrt(gamma^2+x^2)} / sqrt(gamma^2+x^2) dx
//     = a gamma K1(gamma sqrt(a^2+beta^2)) / sqrt(a^2+beta^2)
// by evaluating both sides independently. Requires a, beta, gamma > 0.
OracleReport identity_gradshteyn_3914(double a, double beta, double gamma,
                                      double tol);

// Total mass Int_R G(x, y; r) dx = e^{-r y}.
double halfplane_mass(double y, double r);

// One-sided tail mass H(xi, y) = Int_xi^inf G(x, y; r) dx. Closed form
// atan(y / xi)/pi at r = 0; a rapidly converging Fourier integral otherwise.
// Requires xi > 0.
double halfplane_tail_mass(double xi, double y, double r, double tol);

}  // namespace skge::halfplane
