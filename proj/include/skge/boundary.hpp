// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace skge {

// Boundary data for a Dirichlet problem, bundled with the analytic facts
// the solver needs: a Hölder modulus (admissibility), a sup bound (kernel
// truncation budgets), and, when the function is constant outside a compact
// interval, those constants (exact tail compensation).
struct BoundaryFunction {
  std::function<double(double)> eval;

  // |phi(u) - phi(v)| <= holder_c |u - v|^holder_lambda away from isolated
  // jump points; lambda in (0, 1].
  double holder_lambda = 1.0;
  double holder_c = 1.0;

  // sup_u |phi(u)|.
  double sup_bound = 1.0;

  // phi(u) == left_constant for u < -compact_radius and right_constant for
  // u > compact_radius. compact_radius == +inf declares no such structure.
  double left_constant = 0.0;
  double right_constant = 0.0;
  double compact_radius = std::numeric_limits<double>::infinity();

  // Abscissae where phi is not smooth (jumps, kinks, cusps). Convolution
  // quadrature places panel boundaries at their images: a jump that falls
  // between two nodes of a panel is invisible to the panel's error
  // estimate, so it must never sit in a panel interior.
  std::vector<double> breakpoints;

  bool has_constant_tails() const {
    return compact_radius != std::numeric_limits<double>::infinity();
  }

  // Clamps to the declared constants outside the compact interval so that
  // tiny residuals of decaying profiles cannot contradict the declaration.
  double operator()(double u) const {
    if (has_constant_tails()) {
      if (u < -compact_radius) return left_constant;
      if (u > compact_radius) return right_constant;
    }
    return eval(u);
  }
};

// phi(u) = c everywhere.
BoundaryFunction boundary_constant(double c);

// Heaviside step: 0 for u < 0, 1 for u > 0, 1/2 at u = 0. A jump, not
// Hölder; admissible for interior evaluation, recovered boundary values
// converge only at continuity points.
BoundaryFunction boundary_step();

// phi(u) = e^{-eps u} for u >= 0, 0 for u < 0 (eps > 0).
BoundaryFunction boundary_exp_step(double eps);

// phi(u) = exp(-(u-mu)^2 / (2 sigma^2)) (sigma > 0).
BoundaryFunction boundary_gaussian(double mu, double sigma);

// phi(u) = cos(a u): bounded, no constant tails.
BoundaryFunction boundary_cosine(double a);

// phi(u) = max(0, 1 - |u|^lambda), lambda in (0, 1]: a Hölder-lambda cusp
// at the origin with compact support [-1, 1].
BoundaryFunction boundary_holder_cusp(double lambda);

// Parses "name" or "name(a)" or "name(a,b)" into one of the factories
// above: constant(c), step, exp_step(eps), gaussian(mu,sigma), cosine(a),
// holder_cusp(lambda). Throws domain_error on unknown names or bad
// arguments.
BoundaryFunction make_boundary(const std::string& spec);

}  // namespace skge
