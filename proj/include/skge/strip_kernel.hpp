// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#pragma once

#include <cstddef>

namespace skge::strip {

// Evaluation point for the strip kernel G(x, y; r): the boundary source
// sits at the origin of the bottom edge y = 0, the strip is 0 <= y <= pi,
// and r >= 0 is the mass parameter of (Laplacian - r^2).
struct StripKernelPoint {
  double x = 0;
  double y = 0;
  double r = 0;
};

// |x| at or above this, the modal series is the preferred representation;
// below it the smoothed integral representation converges faster than the
// series (whose terms decay like e^{-|x| k}).
inline constexpr double x_switch = 0.25;

// Modal series (1/pi) sum_k k sin(k y) e^{-|x| sqrt(k^2+r^2)} / sqrt(k^2+r^2),
// truncated once the geometric tail bound e^{-|x|(K+1)} / (1 - e^{-|x|})
// drops below tol. Throws series_divergence_error at x = 0 (terms do not
// decay) and when the required term count is astronomically large.
double green_strip_series(const StripKernelPoint& p, double tol);

// Closed form of the massless (r = 0) kernel:
//   sin y / (2 pi (cosh x - cos y)).
// Throws singularity_error at the boundary source point (0, 0).
double green_strip_laplace(double x, double y);

// Single smoothed integral representation
//   (sin y / 2 pi) * Int_{|x|}^inf J0(r sqrt(s^2-x^2)) sinh s / (cosh s - cos y)^2 ds,
// valid for every r >= 0. The integrand is smooth at s = |x|. Requires
// |x| > 0 (throws singularity_error at x = 0); returns the boundary limit 0
// at y = 0 or y = pi.
double green_strip_integral(const StripKernelPoint& p, double tol);

// Subtraction form G = G_laplace(x, y) - r Int_0^inf G_laplace(sqrt(x^2+w^2), y) J1(r w) dw.
// Exact reduction to the closed form at r = 0. Same singular point (0, 0).
double green_strip_via_j1(const StripKernelPoint& p, double tol);

// Dispatcher: boundary rows give 0, r = 0 gives the closed form, |x| >=
// x_switch the series, smaller |x| (including x = 0, y interior, where the
// kernel is finite) the integral representation.
double green_strip(const StripKernelPoint& p, double tol);

// Total mass M(y) = Int_R G(x, y; r) dx = sinh((pi - y) r) / sinh(pi r),
// the value a constant-1 boundary function produces at height y.
// Reduces to (pi - y)/pi at r = 0.
double strip_mass(double y, double r);

// One-sided tail mass H(xi, y) = Int_xi^inf G(x, y; r) dx
//   = (1/pi) sum_k k sin(k y) e^{-xi sqrt(k^2+r^2)} / (k^2 + r^2),
// used to bound and to compensate truncated convolutions. Requires xi > 0.
double strip_tail_mass(double xi, double y, double r, double tol);

}  // namespace skge::strip
