// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
//
// Disk validator: separable re-solution of sampled circles and the
// mean-value identity, first against closed forms, then against the
// convolution solver and the finite-difference oracle.
#include <cmath>
#include <cstddef>

#include "doctest.h"
#include "skge/boundary.hpp"
#include "skge/bvp_solver.hpp"
#include "skge/disk_validator.hpp"
#include "skge/errors.hpp"
#include "skge/fd_oracle.hpp"
#include "skge/field_grid.hpp"
#include "skge/specfun.hpp"

using namespace skge;

namespace {

// Analytic strip solution as a field function (r = 1, gaussian data).
std::function<double(double, double)> strip_field(double tol) {
  KernelSpec ks{Domain::strip, Representation::automatic, 1.0};
  auto phi = boundary_gaussian(0.0, 0.6);
  return [=](double x, double y) {
    return convolve_kernel(ks, phi, x, y, tol);
  };
}

}  // namespace

TEST_SUITE("disk_validator") {

TEST_CASE("constant data attenuates by one over I0") {
  auto p = disk::make_disk_problem(0.0, 0.0, 0.5, 1.0,
                                   [](double) { return 1.0; }, 64);
  // Center value of the unit-data solution on a disk with r rho_tilde = 1/2.
  CHECK(disk::disk_solution(p, 0.0, 0.0, 1e-12) ==
        doctest::Approx(0.94030619331915731).epsilon(1e-14));
  // Only the n = 0 mode is present, so any interior point reduces to the
  // I0 ratio at its own radius.
  CHECK(disk::disk_solution(p, 0.25, 0.7, 1e-12) ==
        doctest::Approx(specfun::bessel_i_ratio(0, 0.25, 0.5))
            .epsilon(1e-14));
}

TEST_CASE("pure harmonic modes reproduce their power laws") {
  auto p1 = disk::make_disk_problem(0.0, 0.0, 2.0, 0.0,
                                    [](double t) { return std::cos(t); }, 64);
  CHECK(disk::disk_solution(p1, 1.2, 0.3, 1e-13) ==
        doctest::Approx(0.6 * std::cos(0.3)).epsilon(1e-13));
  auto p2 = disk::make_disk_problem(0.0, 0.0, 2.0, 0.0,
                                    [](double t) { return std::sin(2.0 * t); },
                                    64);
  CHECK(disk::disk_solution(p2, 1.2, 0.3, 1e-13) ==
        doctest::Approx(0.36 * std::sin(0.6)).epsilon(1e-13));
}

TEST_CASE("disk re-solve matches the strip solution on an interior circle") {
  auto field = strip_field(1e-9);
  const double cx = 0.3, cy = 1.2, rt = 0.4;
  auto p = disk::make_disk_problem(cx, cy, rt, 1.0,
                                   [&](double t) {
                                     return field(cx + rt * std::cos(t),
                                                  cy + rt * std::sin(t));
                                   },
                                   64);
  for (double rho : {0.0, 0.15, 0.3})
    for (double theta : {0.0, 1.1, 2.9, 4.4}) {
      double direct = field(cx + rho * std::cos(theta),
                            cy + rho * std::sin(theta));
      double resolved = disk::disk_solution(p, rho, theta, 1e-9);
      CHECK(resolved == doctest::Approx(direct).epsilon(1e-6));
      if (rho == 0.0) break;  // theta is irrelevant at the center
    }
}

TEST_CASE("mean value identity holds for the analytic field") {
  auto field = strip_field(1e-8);
  disk::MeanValueReport rep =
      disk::mean_value_check(field, 0.2, 1.5, 0.3, 1.0, 1e-6, 128);
  CHECK(rep.pass);
  CHECK(rep.discrepancy <= 1e-6);
  CHECK(rep.predicted ==
        doctest::Approx(field(0.2, 1.5) * specfun::bessel_i(0, 0.3))
            .epsilon(1e-12));
}

TEST_CASE("mean value identity flags a non-solution") {
  auto field = strip_field(1e-8);
  auto broken = [&](double x, double y) {
    double dx = x - 0.2, dy = y - 1.5;
    return field(x, y) + 0.01 * (dx * dx + dy * dy);
  };
  disk::MeanValueReport rep =
      disk::mean_value_check(broken, 0.2, 1.5, 0.3, 1.0, 1e-5, 128);
  CHECK(!rep.pass);
  // The bump is constant on the circle and zero at the center, so it
  // shifts the average by exactly 0.01 R^2.
  CHECK(rep.discrepancy == doctest::Approx(9e-4).epsilon(0.01));
}

TEST_CASE("finite-difference field passes the identity through bilinear") {
  elliptic::EllipticCoefficients c;  // canonical strip, r = 1
  auto phi = boundary_gaussian(0.0, 0.8);
  fd::FdProblem p = fd::make_strip_fd_problem(c, phi, 6.0, 48);
  FieldGrid g = fd::assemble_and_solve(p, 1e-10);
  auto field = [&](double x, double y) { return bilinear(g, x, y); };
  disk::MeanValueReport rep =
      disk::mean_value_check(field, 0.0, 1.5, 0.3, 1.0, 3e-3, 128);
  CHECK(rep.pass);
  disk::MeanValueReport rep2 =
      disk::mean_value_check(field, 0.8, 2.0, 0.25, 1.0, 3e-3, 128);
  CHECK(rep2.pass);
}

TEST_CASE("validation rejects malformed problems") {
  auto one = [](double) { return 1.0; };
  CHECK_THROWS_AS(disk::make_disk_problem(0, 0, 1.0, 1.0, one, 7),
                  domain_error);
  CHECK_THROWS_AS(disk::make_disk_problem(0, 0, 1.0, 1.0, one, 6),
                  domain_error);
  CHECK_THROWS_AS(disk::make_disk_problem(0, 0, 1.0, 1.0, one, 402),
                  domain_error);
  CHECK_THROWS_AS(disk::make_disk_problem(0, 0, -1.0, 1.0, one, 64),
                  domain_error);
  CHECK_THROWS_AS(disk::make_disk_problem(0, 0, 1.0, -1.0, one, 64),
                  domain_error);
  CHECK_THROWS_AS(disk::make_disk_problem(0, 0, 1.0, 1e4, one, 64),
                  range_error);

  auto p = disk::make_disk_problem(0, 0, 1.0, 1.0, one, 64);
  CHECK_THROWS_AS(disk::disk_solution(p, 1.5, 0.0, 1e-9), domain_error);
  CHECK_THROWS_AS(disk::disk_solution(p, -0.1, 0.0, 1e-9), domain_error);
  CHECK_THROWS_AS(disk::disk_solution(p, 0.5, 0.0, 0.0), domain_error);
  p.boundary_values.pop_back();
  CHECK_THROWS_AS(disk::disk_solution(p, 0.5, 0.0, 1e-9), shape_error);

  auto f = [](double, double) { return 0.0; };
  CHECK_THROWS_AS(disk::mean_value_check(f, 0, 0, 0.3, 1.0, 1e-6, 8),
                  domain_error);
  CHECK_THROWS_AS(disk::mean_value_check(f, 0, 0, 0.0, 1.0, 1e-6),
                  domain_error);
  CHECK_THROWS_AS(disk::mean_value_check(f, 0, 0, 0.3, 1.0, -1.0),
                  domain_error);
}

}  // TEST_SUITE
