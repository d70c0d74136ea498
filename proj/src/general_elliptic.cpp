// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#include "skge/general_elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "skge/errors.hpp"
#include "skge/halfplane_kernel.hpp"
#include "skge/quadrature.hpp"
#include "skge/strip_kernel.hpp"

namespace skge::elliptic {
namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

double DerivedChangeOfVariables::R(double k) const {
  return c_strip * std::sqrt(k * k + r_hat_strip * r_hat_strip);
}

double DerivedChangeOfVariables::R_inf(double xi) const {
  return c_half * std::sqrt(xi * xi + r_hat_half * r_hat_half);
}

DerivedChangeOfVariables derive_change_of_variables(
    const EllipticCoefficients& c) {
  if (!std::isfinite(c.sigma1) || !std::isfinite(c.sigma2) ||
      !std::isfinite(c.rho) || !std::isfinite(c.alpha1) ||
      !std::isfinite(c.alpha2) || !std::isfinite(c.r) ||
      !std::isfinite(c.width_l))
    throw domain_error("elliptic coefficients: non-finite entry");
  if (!(c.sigma1 > 0.0) || !(c.sigma2 > 0.0))
    throw ellipticity_error(
        "elliptic coefficients: diffusion scales must be positive");
  if (!(std::fabs(c.rho) < 1.0))
    throw ellipticity_error("elliptic coefficients: requires |rho| < 1");
  if (c.r < 0.0)
    throw domain_error("elliptic coefficients: negative mass parameter");
  if (!(c.width_l > 0.0))
    throw domain_error("elliptic coefficients: strip width must be positive");

  DerivedChangeOfVariables d;
  const double om = 1.0 - c.rho * c.rho;
  d.width_l = c.width_l;
  d.s_slope = c.rho * c.sigma1 / c.sigma2;
  d.beta = (c.alpha1 / c.sigma1 - c.rho * c.alpha2 / c.sigma2) /
           (2.0 * c.sigma1 * om);
  d.vertical_rate = c.alpha2 / (2.0 * c.sigma2 * c.sigma2);
  const double q2 = c.r * c.r + c.sigma1 * c.sigma1 * om * d.beta * d.beta +
                    c.alpha2 * c.alpha2 /
                        (4.0 * c.sigma2 * c.sigma2);
  d.q = std::sqrt(q2);
  d.c_strip = kPi * c.sigma2 / (c.width_l * c.sigma1 * std::sqrt(om));
  d.r_hat_strip = c.width_l * d.q / (c.sigma2 * kPi);
  d.c_half = c.sigma2 / (c.sigma1 * std::sqrt(om));
  d.r_hat_half = d.q / c.sigma2;
  d.mu = std::sqrt(c.alpha2 * c.alpha2 +
                   4.0 * c.sigma2 * c.sigma2 * c.r * c.r) /
         (2.0 * c.sigma2 * c.sigma2);
  return d;
}

double green_strip_general(double x, double y, const EllipticCoefficients& c,
                           double tol) {
  const DerivedChangeOfVariables d = derive_change_of_variables(c);
  if (!std::isfinite(x) || !std::isfinite(y))
    throw domain_error("general strip kernel: non-finite argument");
  if (!(tol > 0.0))
    throw domain_error("general strip kernel: tolerance must be positive");
  if (y < 0.0 || y > c.width_l)
    throw domain_error("general strip kernel: y outside [0, width]");
  if (y == 0.0 && x == 0.0)
    throw singularity_error("general strip kernel: evaluation at the source");
  if (y == 0.0 || y == c.width_l) return 0.0;
  const double s = d.s(x, y);
  if (s == 0.0)
    throw singularity_error(
        "general strip kernel: on the sheared singular column s = 0");
  const double w =
      d.c_strip * std::exp(-d.vertical_rate * y + d.beta * s);
  strip::StripKernelPoint p{d.c_strip * s, kPi * y / c.width_l, d.r_hat_strip};
  double inner_tol = std::clamp(tol / std::max(w, 1e-300), 1e-15, 1e2);
  return w * strip::green_strip(p, inner_tol);
}

double green_halfplane_general(double x, double y,
                               const EllipticCoefficients& c, double tol) {
  const DerivedChangeOfVariables d = derive_change_of_variables(c);
  if (!std::isfinite(x) || !std::isfinite(y))
    throw domain_error("general half-plane kernel: non-finite argument");
  if (!(tol > 0.0))
    throw domain_error(
        "general half-plane kernel: tolerance must be positive");
  if (y < 0.0)
    throw domain_error("general half-plane kernel: y must be >= 0");
  if (y == 0.0 && x == 0.0)
    throw singularity_error(
        "general half-plane kernel: evaluation at the source");
  if (y == 0.0) return 0.0;
  // Unlike the strip image, the closed Bessel form is regular on the whole
  // open half-plane, so s = 0 needs no guard for y > 0.
  const double s = d.s(x, y);
  const double w = d.c_half * std::exp(-d.vertical_rate * y + d.beta * s);
  halfplane::HalfplaneKernelPoint p{d.c_half * s, y, d.r_hat_half};
  return w * halfplane::green_halfplane_closed(p);
}

double strip_general_mass(const EllipticCoefficients& c, double y) {
  const DerivedChangeOfVariables d = derive_change_of_variables(c);
  if (!std::isfinite(y) || y < 0.0 || y > c.width_l)
    throw domain_error("general strip mass: y outside [0, width]");
  if (d.mu == 0.0) return (c.width_l - y) / c.width_l;  // r = 0, alpha2 = 0
  // e^{-rate y} sinh(mu (l-y)) / sinh(mu l), in overflow-safe form.
  const double a = d.mu * (c.width_l - y);
  const double b = d.mu * c.width_l;
  return std::exp(-d.vertical_rate * y - d.mu * y) * std::expm1(-2.0 * a) /
         std::expm1(-2.0 * b);
}

double halfplane_general_mass(const EllipticCoefficients& c, double y) {
  const DerivedChangeOfVariables d = derive_change_of_variables(c);
  if (!std::isfinite(y) || y < 0.0)
    throw domain_error("general half-plane mass: y must be >= 0");
  return std::exp(-(d.vertical_rate + d.mu) * y);
}

double strip_general_tail_mass(const EllipticCoefficients& c, double xi,
                               double y, bool positive_side, double tol) {
  const DerivedChangeOfVariables d = derive_change_of_variables(c);
  if (!(xi > 0.0)) throw domain_error("general tail mass: requires xi > 0");
  if (!std::isfinite(y) || y < 0.0 || y > c.width_l)
    throw domain_error("general tail mass: y outside [0, width]");
  if (!(tol > 0.0)) throw domain_error("general tail mass: tolerance");
  if (y == 0.0 || y == c.width_l) return 0.0;
  const double sgn = positive_side ? 1.0 : -1.0;
  const double pref = d.c_strip * d.c_strip / kPi *
                      std::exp(-d.vertical_rate * y);
  long double acc = 0.0L;
  for (int k = 1; k <= 200000; ++k) {
    const double rk = d.R(k);
    const double rate = rk - sgn * d.beta;  // > 0 since R(k) > |beta|
    const double e = -rate * xi;
    if (e < -745.0) break;
    const double term =
        k * std::sin(k * kPi * y / c.width_l) * std::exp(e) / (rk * rate);
    acc += static_cast<long double>(term);
    // |term| <= k e^{-rate xi} / (rk rate); successive bounds shrink at
    // least by e^{-c_strip xi} once k >= 2, so stop on a small bound.
    if (k >= 4 && std::exp(e) * k / (rk * rate) < tol / (8.0 * pref)) break;
  }
  return pref * static_cast<double>(acc);
}

double halfplane_general_tail_mass(const EllipticCoefficients& c, double xi,
                                   double y, bool positive_side, double tol) {
  const DerivedChangeOfVariables d = derive_change_of_variables(c);
  if (!(xi > 0.0)) throw domain_error("general tail mass: requires xi > 0");
  if (!std::isfinite(y) || y < 0.0)
    throw domain_error("general tail mass: y must be >= 0");
  if (!(tol > 0.0)) throw domain_error("general tail mass: tolerance");
  if (y == 0.0) return 0.0;
  const double sgn = positive_side ? 1.0 : -1.0;
  const double pref =
      d.c_half * d.c_half / kPi * std::exp(-d.vertical_rate * y);
  auto f = [&](double u) {
    const double ru = d.R_inf(u);
    const double rate = ru - sgn * d.beta;
    return u * std::sin(u * y) * std::exp(-rate * xi) / (ru * rate);
  };
  // R_inf(u) >= c_half u, so the integrand decays at least like
  // e^{-(c_half u - |beta|) xi}.
  const double rate0 = d.c_half;
  double u_max = std::max(
      (std::log(std::max(pref, 1.0) / (tol * xi * rate0)) / (rate0 * xi)) +
          std::fabs(d.beta) / rate0,
      8.0 / (rate0 * xi));
  std::vector<double> pts = quad::graded_points(0.0, u_max, 1.0 / (xi + 1.0));
  std::vector<double> zeros;
  for (double z = kPi / y; z < u_max && zeros.size() < 4000; z += kPi / y)
    zeros.push_back(z);
  pts = quad::merge_points(pts, zeros);
  return pref *
         quad::integrate_segmented(f, pts, tol / std::max(pref, 1e-300))
             .value;
}

NormalizationDiagnostic strip_normalization_diagnostic(
    const EllipticCoefficients& c) {
  const DerivedChangeOfVariables d = derive_change_of_variables(c);
  NormalizationDiagnostic n;
  n.derived = d.c_strip * d.c_strip / kPi;
  n.printed = kPi * c.sigma2 * c.sigma2 /
              ((1.0 - c.rho * c.rho) * c.sigma1 * c.sigma1 * c.width_l *
               c.width_l);
  n.ratio = n.derived / n.printed;
  return n;
}

NormalizationDiagnostic halfplane_normalization_diagnostic(
    const EllipticCoefficients& c) {
  const DerivedChangeOfVariables d = derive_change_of_variables(c);
  NormalizationDiagnostic n;
  n.derived = d.c_half * d.c_half / kPi;
  n.printed = c.sigma2 * c.sigma2 /
              (kPi * (1.0 - c.rho * c.rho) * c.sigma1 * c.sigma1);
  n.ratio = n.derived / n.printed;
  return n;
}

}  // namespace skge::elliptic
