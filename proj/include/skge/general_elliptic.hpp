// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#pragma once

namespace skge::elliptic {

// Constant coefficients of the operator
//   L V = s1^2 Vxx + 2 rho s1 s2 Vxy + s2^2 Vyy + a1 Vx + a2 Vy - r^2 V
// on the strip 0 <= y <= width_l (half-plane ops ignore width_l).
// Ellipticity requires sigma1, sigma2 > 0 and |rho| < 1.
struct EllipticCoefficients {
  double sigma1 = 1.0;
  double sigma2 = 1.0;
  double rho = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double r = 1.0;
  double width_l = 3.14159265358979323846;
};

// Substitutions reducing L to the canonical operator Delta - q^2 (up to an
// exponential weight): the sheared abscissa s(x, y) = s_slope*y - x, the
// horizontal exponential tilt e^{beta s}, and the vertical exponential
// factor e^{-vertical_rate*y}. The scale factors map the strip of width
// width_l (respectively the half-plane) onto the canonical domain.
struct DerivedChangeOfVariables {
  double s_slope = 0.0;        // rho sigma1 / sigma2
  double beta = 0.0;           // horizontal tilt rate
  double vertical_rate = 0.0;  // alpha2 / (2 sigma2^2); factor e^{-rate*y}
  double q = 0.0;              // effective mass after the substitution

  double c_strip = 0.0;      // canonical abscissa scale, strip
  double r_hat_strip = 0.0;  // canonical mass parameter, strip
  double c_half = 0.0;       // same pair for the half-plane
  double r_hat_half = 0.0;
  double mu = 0.0;  // vertical decay rate of the constant-data solution
  double width_l = 0.0;

  double s(double x, double y) const { return s_slope * y - x; }

  // Horizontal decay rate of strip mode k: the kernel falls like
  // e^{-(R(k) -+ beta) |s|} to the right/left. R(k) > |beta| always.
  double R(double k) const;

  // Half-plane analogue for continuous frequency xi >= 0.
  double R_inf(double xi) const;
};

// Validates the coefficients and computes the substitution constants.
// Throws ellipticity_error for |rho| >= 1 or non-positive sigma, and
// domain_error for non-finite input, r < 0, or width_l <= 0.
DerivedChangeOfVariables derive_change_of_variables(
    const EllipticCoefficients& c);

// Green function of L on the strip 0 <= y <= width_l with a unit boundary
// source at the origin: the exponentially weighted image of the canonical
// strip kernel. Throws singularity_error on the singular column s = 0 for
// interior y (use the convolution layer, which integrates across it).
double green_strip_general(double x, double y, const EllipticCoefficients& c,
                           double tol);

// Half-plane analogue, an image of the closed Bessel form.
double green_halfplane_general(double x, double y,
                               const EllipticCoefficients& c, double tol);

// Total mass Int_R Ghat(x, y) dx = e^{-vertical_rate*y}
//   * sinh(mu (l - y)) / sinh(mu l): the constant-data solution profile.
double strip_general_mass(const EllipticCoefficients& c, double y);

// Half-plane analogue e^{-(vertical_rate + mu) y}.
double halfplane_general_mass(const EllipticCoefficients& c, double y);

// One-sided tail masses Int_{xi}^inf Khat(+-s, y) ds of the kernel written
// in the sheared variable: the right tail (positive_side) decays at rate
// R(k) - beta per mode, the left at R(k) + beta.
double strip_general_tail_mass(const EllipticCoefficients& c, double xi,
                               double y, bool positive_side, double tol);
double halfplane_general_tail_mass(const EllipticCoefficients& c, double xi,
                                   double y, bool positive_side, double tol);

// Cross-check of the kernel normalization: the constant rederived from the
// substitution chain against the directly printed combination of
// coefficients. `ratio` is derived/printed and should be 1 to rounding.
struct NormalizationDiagnostic {
  double derived = 0.0;
  double printed = 0.0;
  double ratio = 0.0;
};
NormalizationDiagnostic strip_normalization_diagnostic(
    const EllipticCoefficients& c);
NormalizationDiagnostic halfplane_normalization_diagnostic(
    const EllipticCoefficients& c);

}  // namespace skge::elliptic
