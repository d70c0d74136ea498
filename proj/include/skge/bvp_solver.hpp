// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#pragma once

#include "skge/boundary.hpp"
#include "skge/field_grid.hpp"
#include "skge/general_elliptic.hpp"

namespace skge {

enum class Domain { strip, halfplane };

// Which kernel representation the convolution evaluates. `automatic`
// follows the dispatcher (series away from the singular column, integral
// near it, closed forms where they exist) and is the only choice the
// solvers use; forcing a representation is intended for kernel tabulation
// and cross-checks.
enum class Representation { automatic, series, integral, closed_form, via_j1 };

struct KernelSpec {
  Domain domain = Domain::strip;
  Representation rep = Representation::automatic;
  double r = 0.0;
};

// Boundary convolution V(x, y) = Int phi(u) G(x - u, y) du, evaluated as
// Int_0^Xi [phi(x+xi) + phi(x-xi)] G(xi, y) d xi plus exact tail
// compensation (declared constant tails times the one-sided tail mass).
// The truncation budget is tol/4; panel grading starts at yhat/8 to
// resolve the kernel peak. Throws accuracy_error (carrying the best value
// and the achieved bound) when the budget cannot be met. err_out, when
// non-null, receives the accumulated error bound.
double convolve_kernel(const KernelSpec& kernel, const BoundaryFunction& phi,
                       double x, double y, double tol,
                       double* err_out = nullptr);

// Same contract for the general-coefficient kernels: the integral is split
// at the sheared singular column u0 = x - s_slope*y and truncated
// asymmetrically, since the tilted kernel decays at rate R(1) - beta to
// the right and R(1) + beta to the left.
double convolve_general(const elliptic::EllipticCoefficients& c, Domain dom,
                        const BoundaryFunction& phi, double x, double y,
                        double tol, double* err_out = nullptr);

// Dirichlet solve on the strip 0 <= y <= pi with data `bottom` on y = 0
// and `top` on y = pi: V = (bottom * G)(x, y) + (top * G)(x, pi - y).
// Rows lying exactly on a boundary copy the data. Points that miss their
// accuracy target keep the best estimate and set the partial flag.
FieldGrid solve_strip(const BoundaryFunction& bottom,
                      const BoundaryFunction& top, const GridSpec& grid,
                      double r, double tol, int threads = 1);

// Dirichlet solve on the half-plane y >= 0. For r = 0 the solution is the
// bounded one (the convolution with the Poisson-type kernel); unbounded
// harmonic additions like c*y are excluded by convention.
FieldGrid solve_halfplane(const BoundaryFunction& phi, const GridSpec& grid,
                          double r, double tol, int threads = 1);

// General-coefficient solves; the strip takes data on y = 0 and zero data
// on y = width_l, the half-plane data on y = 0.
FieldGrid solve_strip_general(const BoundaryFunction& phi,
                              const GridSpec& grid,
                              const elliptic::EllipticCoefficients& c,
                              double tol, int threads = 1);
FieldGrid solve_halfplane_general(const BoundaryFunction& phi,
                                  const GridSpec& grid,
                                  const elliptic::EllipticCoefficients& c,
                                  double tol, int threads = 1);

}  // namespace skge
