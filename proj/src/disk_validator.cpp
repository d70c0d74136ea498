// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#include "skge/disk_validator.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

#include "skge/errors.hpp"
#include "skge/specfun.hpp"

namespace skge::disk {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

void validate_circle(double cx, double cy, double radius, double r) {
  if (!std::isfinite(cx) || !std::isfinite(cy))
    throw domain_error("disk: non-finite center");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw domain_error("disk: radius must be positive");
  if (r < 0.0 || !std::isfinite(r))
    throw domain_error("disk: negative mass parameter");
  if (r * radius > 700.0)
    throw range_error("disk: r * radius exceeds the Bessel overflow guard");
}

}  // namespace

DiskProblem make_disk_problem(double center_x, double center_y,
                              double rho_tilde, double r,
                              const std::function<double(double)>& psi,
                              std::size_t M) {
  validate_circle(center_x, center_y, rho_tilde, r);
  if (M < 8 || M > 400 || M % 2 != 0)
    throw domain_error("disk: sample count must be even and in [8, 400]");
  DiskProblem p;
  p.center_x = center_x;
  p.center_y = center_y;
  p.rho_tilde = rho_tilde;
  p.r = r;
  p.boundary_values.resize(M);
  for (std::size_t j = 0; j < M; ++j)
    p.boundary_values[j] = psi(kTwoPi * static_cast<double>(j) /
                               static_cast<double>(M));
  return p;
}

double disk_solution(const DiskProblem& p, double rho, double theta,
                     double tol) {
  validate_circle(p.center_x, p.center_y, p.rho_tilde, p.r);
  const std::size_t M = p.boundary_values.size();
  if (M < 8 || M > 400 || M % 2 != 0)
    throw shape_error("disk: boundary sample count must be even in [8, 400]");
  if (!(rho >= 0.0) || rho > p.rho_tilde || !std::isfinite(theta))
    throw domain_error("disk: evaluation point outside the disk");
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw domain_error("disk: tolerance must be positive");

  // Real trigonometric interpolation coefficients of the sampled data:
  // a_0 mean, (a_n, b_n) with weight 2/M up to M/2 - 1, Nyquist with 1/M.
  const std::size_t half = M / 2;
  std::vector<double> a(half + 1, 0.0), b(half + 1, 0.0);
  const double step = kTwoPi / static_cast<double>(M);
  for (std::size_t j = 0; j < M; ++j) a[0] += p.boundary_values[j];
  a[0] /= static_cast<double>(M);
  for (std::size_t n = 1; n <= half; ++n) {
    double ca = 0.0, cb = 0.0;
    for (std::size_t j = 0; j < M; ++j) {
      double ang = step * static_cast<double>(n * j % M);
      ca += p.boundary_values[j] * std::cos(ang);
      cb += p.boundary_values[j] * std::sin(ang);
    }
    double w = (n == half) ? 1.0 : 2.0;
    a[n] = w * ca / static_cast<double>(M);
    b[n] = w * cb / static_cast<double>(M);
  }

  // Attenuation per mode is at most (rho/rho_tilde)^n, so the remainder
  // beyond mode N is bounded by q^{N+1} * sum_{n>N} (|a_n| + |b_n|).
  const double q = rho / p.rho_tilde;
  std::vector<double> suffix(half + 2, 0.0);
  for (std::size_t n = half; n >= 1; --n)
    suffix[n] = suffix[n + 1] + std::fabs(a[n]) + std::fabs(b[n]);

  auto ratio = [&](std::size_t n) {
    if (p.r == 0.0) return std::pow(q, static_cast<double>(n));
    return specfun::bessel_i_ratio(static_cast<int>(n), p.r * rho,
                                   p.r * p.rho_tilde);
  };

  double value = a[0] * ratio(0);
  for (std::size_t n = 1; n <= half; ++n) {
    if (suffix[n] * std::pow(q, static_cast<double>(n)) <= tol) break;
    double nt = static_cast<double>(n) * theta;
    value += ratio(n) * (a[n] * std::cos(nt) + b[n] * std::sin(nt));
  }
  return value;
}

MeanValueReport mean_value_check(
    const std::function<double(double, double)>& field, double center_x,
    double center_y, double radius, double r, double tol,
    std::size_t samples) {
  validate_circle(center_x, center_y, radius, r);
  if (samples < 16)
    throw domain_error("disk: mean-value check needs at least 16 samples");
  if (!(tol >= 0.0) || !std::isfinite(tol))
    throw domain_error("disk: tolerance must be non-negative");
  double sum = 0.0;
  const double step = kTwoPi / static_cast<double>(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    double ang = step * static_cast<double>(j);
    sum += field(center_x + radius * std::cos(ang),
                 center_y + radius * std::sin(ang));
  }
  MeanValueReport rep;
  rep.circle_average = sum / static_cast<double>(samples);
  rep.predicted = field(center_x, center_y) * specfun::bessel_i(0, r * radius);
  rep.discrepancy = std::fabs(rep.circle_average - rep.predicted);
  rep.pass = rep.discrepancy <= tol;
  return rep;
}

}  // namespace skge::disk
