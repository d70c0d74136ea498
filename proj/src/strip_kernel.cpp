// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#include "skge/strip_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "skge/errors.hpp"
#include "skge/quadrature.hpp"
#include "skge/specfun.hpp"

namespace skge::strip {
namespace {

constexpr double kPi = 3.14159265358979323846;

void validate_point(const StripKernelPoint& p, double tol) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.r))
    throw domain_error("strip kernel: non-finite argument");
  if (p.y < 0.0 || p.y > kPi)
    throw domain_error("strip kernel: y outside [0, pi]");
  if (p.r < 0.0) throw domain_error("strip kernel: negative mass parameter");
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw domain_error("strip kernel: tolerance must be positive");
}

// Core of the integral representation; accepts x = 0 (interior limit).
//
// The raw integrand J0(rho) sinh s / (cosh s - cos y)^2 spikes like y^{-3}
// just past s = |x| when y is small, which makes direct quadrature both slow
// and ill-conditioned near the boundary.  One integration by parts (the
// antiderivative of sinh s / (cosh s - cos y)^2 is -1/(cosh s - cos y))
// captures the spike in closed form:
//
//   int_{|x|}^{Xi} = 1/(cosh|x| - cos y) - J0(rho(Xi))/(cosh Xi - cos y)
//                    - int_{|x|}^{Xi} r^2 s (J1(rho)/rho) / (cosh s - cos y)
//
// with rho(s) = r sqrt(s^2 - x^2) and J1(z)/z -> 1/2 as z -> 0.  The right
// side equals the truncated raw integral exactly, so the tail estimate for
// choosing Xi is unchanged.
double integral_core(double absx, double y, double r, double tol) {
  const double siny = std::sin(y);
  if (siny <= 0.0) return 0.0;  // y = 0 or pi
  // cosh s - cos y = 2 (sinh^2(s/2) + sin^2(y/2)) avoids the cancellation
  // that costs ~ (s^2 + y^2)/4 relative digits for small s and y.
  const double shy = std::sin(0.5 * y);
  const double shy2 = shy * shy;
  auto denom = [&](double s) {
    double sh = std::sinh(0.5 * s);
    return 2.0 * (sh * sh + shy2);
  };
  // Tail: for s >= 2, sinh s / (cosh s - cos y)^2 <= sinh s/(cosh s - 1)^2
  // <= 3.578 e^{-s}, so the remainder beyond Xi is below
  // (sin y / 2 pi) 3.578 e^{-Xi}.
  double xi = std::max({absx + 1.0, 2.0,
                        std::log(3.578 * siny / (kPi * tol))});
  double rho_xi = r * std::sqrt((xi - absx) * (xi + absx));
  double total = 1.0 / denom(absx) - specfun::bessel_j0(rho_xi) / denom(xi);
  if (r > 0.0) {
    auto w = [&](double s) {
      double u = (s - absx) * (s + absx);  // s^2 - x^2 without cancellation
      double rho = r * std::sqrt(std::max(u, 0.0));
      double j1c = rho < 1e-4 ? 0.5 - rho * rho / 16.0
                              : specfun::bessel_j1(rho) / rho;
      return r * r * s * j1c / denom(s);
    };
    // The remainder peaks at height ~ r^2/(2y) over width ~ y just past
    // s = |x| when y is small; grade the panels toward the left endpoint.
    double q = std::min(y, 1.0);
    auto pts = quad::graded_points(absx, xi, q);
    double inner_tol = tol * kPi / siny;  // budget for the raw remainder
    quad::QuadResult res = quad::integrate_segmented(w, pts, inner_tol);
    total -= res.value;
  }
  return total * siny / (2.0 * kPi);
}

}  // namespace

double green_strip_series(const StripKernelPoint& p, double tol) {
  validate_point(p, tol);
  const double absx = std::fabs(p.x);
  if (absx == 0.0)
    throw series_divergence_error(
        "strip series: terms do not decay at x = 0");
  if (p.y == 0.0 || p.y == kPi) return 0.0;
  // Terms are bounded by e^{-|x| k}; stop at K with
  // e^{-|x|(K+1)} / (1 - e^{-|x|}) <= pi * tol.
  const double q = std::exp(-absx);
  double target = tol * kPi * (1.0 - q);
  if (!(target > 0.0))
    throw series_divergence_error("strip series: tolerance underflow");
  double kd = -std::log(target) / absx;
  if (kd > 5e6)
    throw series_divergence_error(
        "strip series: required term count exceeds 5e6; use the integral "
        "representation");
  const std::size_t kmax = static_cast<std::size_t>(std::max(kd, 1.0)) + 1;
  const double r2 = p.r * p.r;
  long double acc = 0.0L;
  for (std::size_t k = 1; k <= kmax; ++k) {
    double dk = static_cast<double>(k);
    double root = std::sqrt(dk * dk + r2);
    double e = -absx * root;
    if (e < -745.0) break;  // exp underflow: remaining terms vanish
    acc += static_cast<long double>(dk * std::sin(dk * p.y) * std::exp(e) /
                                    root);
  }
  return static_cast<double>(acc) / kPi;
}

double green_strip_laplace(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y))
    throw domain_error("strip laplace kernel: non-finite argument");
  if (y < 0.0 || y > kPi)
    throw domain_error("strip laplace kernel: y outside [0, pi]");
  double denom = std::cosh(x) - std::cos(y);
  if (denom <= 0.0)
    throw singularity_error("strip laplace kernel: evaluation at the source");
  return std::sin(y) / (2.0 * kPi * denom);
}

double green_strip_integral(const StripKernelPoint& p, double tol) {
  validate_point(p, tol);
  if (p.x == 0.0)
    throw singularity_error(
        "strip integral representation: x = 0 is the singular column");
  return integral_core(std::fabs(p.x), p.y, p.r, tol);
}

double green_strip_via_j1(const StripKernelPoint& p, double tol) {
  validate_point(p, tol);
  if (p.x == 0.0 && p.y == 0.0)
    throw singularity_error("strip kernel: evaluation at the source");
  if (p.y == 0.0 || p.y == kPi) return 0.0;
  double base = green_strip_laplace(p.x, p.y);
  if (p.r == 0.0) return base;
  const double siny = std::sin(p.y);
  const double absx = std::fabs(p.x);
  // Tail: G_laplace(t, y) <= 0.4257 sin y e^{-t} for t >= 2 and the J1
  // factor is bounded by 0.5819, so the remainder beyond W is below
  // 0.2477 r sin y e^{-W}.
  double w_max = std::max({3.0, absx + 1.0,
                           std::log(0.4954 * p.r * siny / tol)});
  auto f = [&](double w) {
    double t = std::hypot(p.x, w);
    return green_strip_laplace(t, p.y) * specfun::bessel_j1(p.r * w);
  };
  double q = std::min({p.y, 1.0, absx + p.y});
  auto pts = quad::graded_points(0.0, w_max, q);
  quad::QuadResult res = quad::integrate_segmented(f, pts, tol / (2.0 * p.r));
  return base - p.r * res.value;
}

double green_strip(const StripKernelPoint& p, double tol) {
  validate_point(p, tol);
  if (p.x == 0.0 && p.y == 0.0)
    throw singularity_error("strip kernel: evaluation at the source");
  if (p.y == 0.0 || p.y == kPi) return 0.0;
  if (p.r == 0.0) return green_strip_laplace(p.x, p.y);
  const double absx = std::fabs(p.x);
  if (absx >= x_switch) return green_strip_series(p, tol);
  return integral_core(absx, p.y, p.r, tol);
}

double strip_mass(double y, double r) {
  if (!std::isfinite(y) || !std::isfinite(r))
    throw domain_error("strip mass: non-finite argument");
  if (y < 0.0 || y > kPi) throw domain_error("strip mass: y outside [0, pi]");
  if (r < 0.0) throw domain_error("strip mass: negative mass parameter");
  if (r == 0.0) return (kPi - y) / kPi;
  // sinh((pi-y) r)/sinh(pi r) = e^{-y r} expm1(-2 (pi-y) r)/expm1(-2 pi r),
  // stable for large pi r where both sinh factors overflow.
  double a = (kPi - y) * r;
  double b = kPi * r;
  return std::exp(-y * r) * std::expm1(-2.0 * a) / std::expm1(-2.0 * b);
}

double strip_tail_mass(double xi, double y, double r, double tol) {
  if (!std::isfinite(xi) || !std::isfinite(y) || !std::isfinite(r))
    throw domain_error("strip tail mass: non-finite argument");
  if (!(xi > 0.0)) throw domain_error("strip tail mass: requires xi > 0");
  if (y < 0.0 || y > kPi)
    throw domain_error("strip tail mass: y outside [0, pi]");
  if (r < 0.0) throw domain_error("strip tail mass: negative mass parameter");
  if (!(tol > 0.0)) throw domain_error("strip tail mass: tolerance");
  if (y == 0.0 || y == kPi) return 0.0;
  // Terms bounded by e^{-xi k} (since k/(k^2+r^2) <= 1 for k >= 1).
  double target = tol * kPi * (1.0 - std::exp(-xi));
  double kd = (target > 0.0) ? -std::log(target) / xi : 5e6 + 1;
  if (kd > 5e6)
    throw series_divergence_error("strip tail mass: xi too small");
  const std::size_t kmax = static_cast<std::size_t>(std::max(kd, 1.0)) + 1;
  const double r2 = r * r;
  long double acc = 0.0L;
  for (std::size_t k = 1; k <= kmax; ++k) {
    double dk = static_cast<double>(k);
    double m2 = dk * dk + r2;
    double e = -xi * std::sqrt(m2);
    if (e < -745.0) break;
    acc += static_cast<long double>(dk * std::sin(dk * y) * std::exp(e) / m2);
  }
  return static_cast<double>(acc) / kPi;
}

}  // namespace skge::strip
