// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#include "skge/halfplane_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "skge/errors.hpp"
#include "skge/quadrature.hpp"
#include "skge/specfun.hpp"

namespace skge::halfplane {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Damping threshold: with |x| below this the factor e^{-|x| xi} decays too
// slowly to truncate the Fourier integral, and the oscillation itself must
// supply convergence (Abel summation of half-period panels).
constexpr double kOscillatoryBelow = 0.2;

void validate_point(const HalfplaneKernelPoint& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.r))
    throw domain_error("half-plane kernel: non-finite argument");
  if (p.y < 0.0) throw domain_error("half-plane kernel: y must be >= 0");
  if (p.r < 0.0)
    throw domain_error("half-plane kernel: negative mass parameter");
}

// Raw Fourier integral Int_0^inf xi sin(xi y) e^{-absx sqrt(xi^2+r^2)}
// / sqrt(xi^2+r^2) d xi to absolute tolerance tol (no 1/pi factor).
double raw_fourier(double absx, double y, double r, double tol) {
  auto f = [&](double xi) {
    double eta = std::sqrt(xi * xi + r * r);
    if (eta == 0.0) return 0.0;  // xi = 0 with r = 0: integrand limit 0
    return xi * std::sin(xi * y) * std::exp(-absx * eta) / eta;
  };
  if (absx >= kOscillatoryBelow) {
    // |integrand| <= e^{-absx xi}: remainder beyond Xi is e^{-absx Xi}/absx.
    double xi_max = std::log(2.0 / (tol * absx)) / absx;
    xi_max = std::max(xi_max, 4.0 / absx);
    std::vector<double> pts = quad::graded_points(0.0, xi_max, 1.0);
    if (y > 0.0) {
      std::vector<double> zeros;
      for (double z = kPi / y; z < xi_max && zeros.size() < 4000; z += kPi / y)
        zeros.push_back(z);
      pts = quad::merge_points(pts, zeros);
    }
    return quad::integrate_segmented(f, pts, tol / 2.0).value;
  }
  // Oscillatory route: half-period panels [j pi/y, (j+1) pi/y] alternate in
  // sign; Euler averaging sums them in the Abel sense even at x = 0.
  if (y <= 0.0) return 0.0;
  const double w = kPi / y;
  auto panel = [&](int j) {
    return quad::integrate(f, j * w, (j + 1) * w, tol / 400.0).value;
  };
  return quad::alternating_series(panel, tol / 2.0).value;
}

}  // namespace

double green_halfplane_closed(const HalfplaneKernelPoint& p) {
  validate_point(p);
  if (p.x == 0.0 && p.y == 0.0)
    throw singularity_error("half-plane kernel: evaluation at the source");
  if (p.y == 0.0) return 0.0;
  double d2 = p.x * p.x + p.y * p.y;
  if (p.r == 0.0) return p.y / (kPi * d2);
  double d = std::sqrt(d2);
  return p.r * p.y / (kPi * d) * specfun::bessel_k(1, p.r * d);
}

double green_halfplane_integral(const HalfplaneKernelPoint& p, double tol) {
  validate_point(p);
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw domain_error("half-plane kernel: tolerance must be positive");
  if (p.x == 0.0 && p.y == 0.0)
    throw singularity_error("half-plane kernel: evaluation at the source");
  if (p.y == 0.0) return 0.0;
  try {
    return raw_fourier(std::fabs(p.x), p.y, p.r, tol * kPi) / kPi;
  } catch (const accuracy_error& e) {
    throw accuracy_error(
        "half-plane Fourier integral: oscillatory acceleration failed",
        e.best_estimate() / kPi, e.achieved_error() / kPi);
  }
}

OracleReport identity_gradshteyn_3914(double a, double beta, double gamma,
                                      double tol) {
  if (!(a > 0.0) || !(beta > 0.0) || !(gamma > 0.0))
    throw domain_error("transform identity: a, beta, gamma must be positive");
  if (!(tol > 0.0))
    throw domain_error("transform identity: tolerance must be positive");
  double lhs = raw_fourier(beta, a, gamma, tol / 2.0);
  double root = std::hypot(a, beta);
  double rhs = a * gamma / root * specfun::bessel_k(1, gamma * root);
  OracleReport rep;
  rep.description = "Laplace-transform identity for the damped sine integral";
  rep.tolerance = tol;
  rep.add(lhs, rhs);
  rep.finalize();
  return rep;
}

double halfplane_mass(double y, double r) {
  if (!std::isfinite(y) || !std::isfinite(r))
    throw domain_error("half-plane mass: non-finite argument");
  if (y < 0.0) throw domain_error("half-plane mass: y must be >= 0");
  if (r < 0.0) throw domain_error("half-plane mass: negative mass parameter");
  return std::exp(-r * y);
}

double halfplane_tail_mass(double xi, double y, double r, double tol) {
  if (!std::isfinite(xi) || !std::isfinite(y) || !std::isfinite(r))
    throw domain_error("half-plane tail mass: non-finite argument");
  if (!(xi > 0.0)) throw domain_error("half-plane tail mass: requires xi > 0");
  if (y < 0.0) throw domain_error("half-plane tail mass: y must be >= 0");
  if (r < 0.0)
    throw domain_error("half-plane tail mass: negative mass parameter");
  if (!(tol > 0.0)) throw domain_error("half-plane tail mass: tolerance");
  if (y == 0.0) return 0.0;
  if (r == 0.0) return std::atan(y / xi) / kPi;
  // H = (1/pi) Int_0^inf xi' sin(xi' y) e^{-xi eta} / eta^2 d xi',
  // eta = sqrt(xi'^2 + r^2); |integrand| <= e^{-xi xi'} / (2 r).
  auto f = [&](double u) {
    double eta2 = u * u + r * r;
    return u * std::sin(u * y) * std::exp(-xi * std::sqrt(eta2)) / eta2;
  };
  double budget = tol * kPi;
  double u_max =
      std::max(std::log(1.0 / (r * xi * budget)) / xi, 4.0 / xi);
  std::vector<double> pts = quad::graded_points(0.0, u_max, 1.0 / xi);
  std::vector<double> zeros;
  for (double z = kPi / y; z < u_max && zeros.size() < 4000; z += kPi / y)
    zeros.push_back(z);
  pts = quad::merge_points(pts, zeros);
  return quad::integrate_segmented(f, pts, budget).value / kPi;
}

}  // namespace skge::halfplane
