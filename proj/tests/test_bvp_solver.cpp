// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
//
// Boundary convolution and Dirichlet solvers: closed-form solutions for
// constant, cosine, and step data, structural laws (linearity, translation,
// symmetry, maximum principle), boundary recovery, and failure modes.
#include <cmath>

#include "doctest.h"
#include "skge/boundary.hpp"
#include "skge/bvp_solver.hpp"
#include "skge/errors.hpp"
#include "skge/general_elliptic.hpp"
#include "skge/halfplane_kernel.hpp"
#include "skge/strip_kernel.hpp"

using namespace skge;

namespace {
constexpr double kPi = 3.14159265358979323846;

KernelSpec strip_r(double r) { return {Domain::strip, Representation::automatic, r}; }
KernelSpec half_r(double r) {
  return {Domain::halfplane, Representation::automatic, r};
}

// Separable strip solution for data cos(a x): cos(a x) sh(k(pi-y))/sh(k pi)
// with k = sqrt(a^2 + r^2).
double cosine_strip_solution(double a, double r, double x, double y) {
  double k = std::hypot(a, r);
  return std::cos(a * x) * std::sinh(k * (kPi - y)) / std::sinh(k * kPi);
}
}  // namespace

TEST_SUITE("bvp_solver") {

TEST_CASE("constant data reproduces the mass profile on the strip") {
  auto one = boundary_constant(1.0);
  for (double y : {0.5, 1.5, 2.8}) {
    double v = convolve_kernel(strip_r(1.0), one, 0.3, y, 1e-10);
    CHECK(v == doctest::Approx(strip::strip_mass(y, 1.0)).epsilon(1e-9));
  }
  // Massless case: the linear profile (pi - y)/pi.
  double v0 = convolve_kernel(strip_r(0.0), one, -2.0, 1.0, 1e-10);
  CHECK(v0 == doctest::Approx((kPi - 1.0) / kPi).epsilon(1e-9));
}

TEST_CASE("constant data reproduces the exponential profile, half-plane") {
  auto one = boundary_constant(1.0);
  for (double y : {0.3, 1.0, 2.5}) {
    double v = convolve_kernel(half_r(1.0), one, 0.0, y, 1e-10);
    CHECK(v == doctest::Approx(std::exp(-y)).epsilon(1e-9));
  }
  double v0 = convolve_kernel(half_r(0.0), one, 5.0, 0.7, 1e-10);
  CHECK(v0 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("cosine data separates on the strip") {
  auto phi = boundary_cosine(1.0);
  double v = convolve_kernel(strip_r(1.0), phi, 0.0, kPi / 2, 1e-9);
  CHECK(v == doctest::Approx(0.10719187617379400).epsilon(1e-7));
  for (double x : {0.0, 0.9})
    for (double y : {0.8, 2.0}) {
      double got = convolve_kernel(strip_r(1.0), phi, x, y, 1e-9);
      CHECK(got ==
            doctest::Approx(cosine_strip_solution(1.0, 1.0, x, y))
                .epsilon(2e-8));
    }
}

TEST_CASE("cosine data separates on the half-plane") {
  auto phi = boundary_cosine(1.0);
  // cos(x) e^{-sqrt(2) y} at (0, 1): e^{-sqrt 2}.
  double v = convolve_kernel(half_r(1.0), phi, 0.0, 1.0, 1e-9);
  CHECK(v == doctest::Approx(0.24311673443421421).epsilon(1e-7));
  double v2 = convolve_kernel(half_r(1.0), phi, 1.3, 0.6, 1e-9);
  double want = std::cos(1.3) * std::exp(-std::sqrt(2.0) * 0.6);
  CHECK(v2 == doctest::Approx(want).epsilon(2e-8));
}

TEST_CASE("step data on the massless half-plane has the arctangent form") {
  auto phi = boundary_step();
  double v = convolve_kernel(half_r(0.0), phi, 1.0, 1.0, 1e-8);
  CHECK(v == doctest::Approx(0.75).epsilon(1e-7));
  double v2 = convolve_kernel(half_r(0.0), phi, -0.6, 0.9, 1e-8);
  double want = 0.5 + std::atan(-0.6 / 0.9) / kPi;
  CHECK(v2 == doctest::Approx(want).epsilon(1e-7));
  // Directly over the jump the solution takes the mean value.
  double vm = convolve_kernel(half_r(0.0), phi, 0.0, 0.4, 1e-8);
  CHECK(vm == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("step data obeys the complementarity identity on the strip") {
  // phi(u) + phi(-u) = 1, so V(x, y) + V(-x, y) equals the mass profile.
  auto phi = boundary_step();
  double m = strip::strip_mass(1.0, 1.0);
  double vp = convolve_kernel(strip_r(1.0), phi, 0.7, 1.0, 1e-8);
  double vn = convolve_kernel(strip_r(1.0), phi, -0.7, 1.0, 1e-8);
  CHECK(vp + vn == doctest::Approx(m).epsilon(1e-7));
  CHECK(vp > vn);  // the data sits to the right
  double v0 = convolve_kernel(strip_r(1.0), phi, 0.0, 1.0, 1e-8);
  CHECK(v0 == doctest::Approx(m / 2).epsilon(1e-7));
}

TEST_CASE("a jump between quadrature nodes is still resolved") {
  // For this x the jump image xi = x lands in the gap between a graded
  // panel's endpoint and its outermost Kronrod node, where all samples see
  // a smooth integrand. Without a declared breakpoint the panel estimate
  // reports ~1e-15 while the value misses by ~5e-4.
  auto phi = boundary_step();
  const double x = 0.878709791347730, y = 1.059037740555806, r = 0.5;
  // Independent route: integrate the kernel itself past the jump,
  // V(x, y) = mass(y) - H(x, y) for x > 0.
  double want = halfplane::halfplane_mass(y, r) -
                halfplane::halfplane_tail_mass(x, y, r, 1e-12);
  double err_est = 0.0;
  double v = convolve_kernel(half_r(r), phi, x, y, 1e-8, &err_est);
  CHECK(std::fabs(v - want) <= 1e-8);
  CHECK(std::fabs(v - want) <= err_est + 1e-12);
}

TEST_CASE("convolution is linear and translation equivariant") {
  auto g = boundary_gaussian(0.0, 0.6);
  BoundaryFunction g2 = g;
  g2.eval = [inner = g.eval](double u) { return 2.0 * inner(u); };
  g2.sup_bound = 2.0;
  g2.holder_c = 2.0 * g.holder_c;
  double v1 = convolve_kernel(strip_r(0.5), g, 0.4, 1.2, 1e-10);
  double v2 = convolve_kernel(strip_r(0.5), g2, 0.4, 1.2, 1e-10);
  CHECK(v2 == doctest::Approx(2.0 * v1).epsilon(1e-9));

  auto gs = boundary_gaussian(0.8, 0.6);
  double vs = convolve_kernel(strip_r(0.5), gs, 1.2, 1.2, 1e-10);
  double vt = convolve_kernel(strip_r(0.5), g, 0.4, 1.2, 1e-10);
  CHECK(vs == doctest::Approx(vt).epsilon(1e-9));
}

TEST_CASE("even data gives an even solution; max principle holds") {
  auto g = boundary_gaussian(0.0, 0.5);
  for (double x : {0.3, 1.1}) {
    double vp = convolve_kernel(half_r(1.0), g, x, 0.7, 1e-9);
    double vn = convolve_kernel(half_r(1.0), g, -x, 0.7, 1e-9);
    CHECK(vp == doctest::Approx(vn).epsilon(1e-8));
    CHECK(vp > 0.0);
    CHECK(vp < 1.0);
  }
  auto s = boundary_step();
  for (double x : {-2.0, 0.0, 1.5})
    for (double y : {0.4, 1.8}) {
      double v = convolve_kernel(strip_r(1.0), s, x, y, 1e-8);
      CHECK(v > 0.0);
      CHECK(v < 1.0);
    }
}

TEST_CASE("solution approaches the data near the boundary") {
  auto g = boundary_gaussian(0.0, 0.6);
  for (double x : {0.0, 0.3, 1.0}) {
    double v = convolve_kernel(strip_r(1.0), g, x, 5e-3, 1e-9);
    CHECK(std::fabs(v - g(x)) < 5e-2);
    double vh = convolve_kernel(half_r(1.0), g, x, 5e-3, 1e-9);
    CHECK(std::fabs(vh - g(x)) < 5e-2);
  }
  // Exactly on the boundary the data is copied.
  CHECK(convolve_kernel(strip_r(1.0), g, 0.3, 0.0, 1e-9) == g(0.3));
  CHECK(convolve_kernel(strip_r(1.0), g, 0.3, kPi, 1e-9) == 0.0);
}

TEST_CASE("general convolution: canonical agreement and mass profiles") {
  elliptic::EllipticCoefficients canon;  // identity operator, r = 1
  auto g = boundary_gaussian(0.0, 0.6);
  double gen = convolve_general(canon, Domain::strip, g, 0.3, 1.0, 1e-9);
  double plain = convolve_kernel(strip_r(1.0), g, 0.3, 1.0, 1e-9);
  CHECK(gen == doctest::Approx(plain).epsilon(5e-9));

  // Mixed coefficients, constant data: V(x, y) is the frozen mass profile
  // independent of x.
  elliptic::EllipticCoefficients mixed;
  mixed.sigma1 = 1.0;
  mixed.sigma2 = 1.5;
  mixed.rho = 0.4;
  mixed.alpha1 = 0.3;
  mixed.alpha2 = -0.4;
  mixed.r = 2.0;
  mixed.width_l = 2.5;
  auto one = boundary_constant(1.0);
  for (double x : {-0.9, 0.37}) {
    double v = convolve_general(mixed, Domain::strip, one, x, 1.1, 1e-9);
    CHECK(v == doctest::Approx(0.24786000370495995).epsilon(2e-8));
  }
  // Drifted half-plane: e^{-mu y} with mu = r here (alpha2 = 0).
  elliptic::EllipticCoefficients drift;
  drift.alpha1 = 0.5;
  drift.r = 2.5;
  double vh = convolve_general(drift, Domain::halfplane, one, 0.6, 0.8, 1e-9);
  CHECK(vh == doctest::Approx(std::exp(-2.0)).epsilon(1e-8));
}

TEST_CASE("strip solver fills grids and honors boundary rows") {
  auto bottom = boundary_gaussian(0.0, 0.8);
  auto top = boundary_constant(0.0);
  GridSpec spec{-1.0, 1.0, 3, 0.0, kPi, 5};
  FieldGrid f = solve_strip(bottom, top, spec, 1.0, 1e-8);
  CHECK_FALSE(f.partial);
  CHECK(f.at(1, 0) == bottom(0.0));
  CHECK(f.at(1, 4) == 0.0);
  for (std::size_t iy = 1; iy + 1 < f.ny(); ++iy) {
    CHECK(f.at(1, iy) > 0.0);
    CHECK(f.at(1, iy) < 1.0);
    CHECK(f.at(0, iy) == doctest::Approx(f.at(2, iy)).epsilon(1e-7));
  }
  // Interior spot value against a direct convolution.
  double direct = convolve_kernel(strip_r(1.0), bottom, 0.0, f.ys[2], 1e-8);
  CHECK(f.at(1, 2) == doctest::Approx(direct).epsilon(1e-7));
}

TEST_CASE("strip solver combines bottom and top contributions") {
  auto one = boundary_constant(1.0);
  auto zero = boundary_constant(0.0);
  GridSpec spec{0.0, 1.0, 2, 0.7, 2.4, 3};
  FieldGrid top_only = solve_strip(zero, one, spec, 1.0, 1e-9);
  for (std::size_t iy = 0; iy < 3; ++iy) {
    double y = top_only.ys[iy];
    // Data on the top edge mirrors the mass profile.
    CHECK(top_only.at(0, iy) ==
          doctest::Approx(strip::strip_mass(kPi - y, 1.0)).epsilon(1e-8));
  }
  FieldGrid both = solve_strip(one, one, spec, 1.0, 1e-9);
  for (std::size_t iy = 0; iy < 3; ++iy) {
    double y = both.ys[iy];
    double want = strip::strip_mass(y, 1.0) + strip::strip_mass(kPi - y, 1.0);
    CHECK(both.at(0, iy) == doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("half-plane solver matches the closed profile") {
  auto one = boundary_constant(1.0);
  GridSpec spec{-0.5, 0.5, 2, 0.0, 2.0, 3};
  FieldGrid f = solve_halfplane(one, spec, 1.0, 1e-9);
  CHECK(f.at(0, 0) == 1.0);
  CHECK(f.at(0, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-8));
  CHECK(f.at(0, 2) == doctest::Approx(std::exp(-2.0)).epsilon(1e-8));
}

TEST_CASE("general solvers run end to end") {
  elliptic::EllipticCoefficients mixed;
  mixed.sigma1 = 1.0;
  mixed.sigma2 = 1.5;
  mixed.rho = 0.4;
  mixed.alpha1 = 0.3;
  mixed.alpha2 = -0.4;
  mixed.r = 2.0;
  mixed.width_l = 2.5;
  auto one = boundary_constant(1.0);
  GridSpec spec{-0.4, 0.4, 3, 0.0, 2.5, 3};
  FieldGrid f = solve_strip_general(one, spec, mixed, 1e-8);
  CHECK_FALSE(f.partial);
  CHECK(f.at(1, 0) == 1.0);
  CHECK(f.at(1, 2) == 0.0);
  CHECK(f.at(1, 1) ==
        doctest::Approx(elliptic::strip_general_mass(mixed, 1.25))
            .epsilon(1e-7));

  FieldGrid h = solve_halfplane_general(one, spec, mixed, 1e-8);
  CHECK(h.at(2, 1) ==
        doctest::Approx(elliptic::halfplane_general_mass(mixed, 1.25))
            .epsilon(1e-7));
}

TEST_CASE("unattainable tolerance raises accuracy_error with a best value") {
  auto g = boundary_gaussian(0.0, 0.6);
  bool threw = false;
  try {
    convolve_kernel(strip_r(1.0), g, 0.3, 1.0, 1e-16);
  } catch (const accuracy_error& e) {
    threw = true;
    double ref = convolve_kernel(strip_r(1.0), g, 0.3, 1.0, 1e-10);
    CHECK(e.best_estimate() == doctest::Approx(ref).epsilon(1e-8));
    CHECK(e.achieved_error() > 1e-16);
  }
  CHECK(threw);
}

TEST_CASE("grid solves survive per-point failures via the partial flag") {
  auto g = boundary_gaussian(0.0, 0.6);
  auto zero = boundary_constant(0.0);
  GridSpec spec{-0.3, 0.3, 2, 0.5, 2.5, 2};
  FieldGrid f = solve_strip(g, zero, spec, 1.0, 1e-16);
  CHECK(f.partial);
  for (std::size_t iy = 0; iy < f.ny(); ++iy)
    for (std::size_t ix = 0; ix < f.nx(); ++ix) {
      double ref = convolve_kernel(strip_r(1.0), g, f.xs[ix], f.ys[iy], 1e-9);
      CHECK(f.at(ix, iy) == doctest::Approx(ref).epsilon(1e-6));
    }
}

TEST_CASE("forced representations are validated per domain") {
  auto one = boundary_constant(1.0);
  KernelSpec bad1{Domain::strip, Representation::closed_form, 1.0};
  CHECK_THROWS_AS(convolve_kernel(bad1, one, 0.0, 1.0, 1e-8), domain_error);
  KernelSpec bad2{Domain::halfplane, Representation::series, 1.0};
  CHECK_THROWS_AS(convolve_kernel(bad2, one, 0.0, 1.0, 1e-8), domain_error);
  // Forcing the strip closed form at r = 0 is legitimate.
  KernelSpec ok{Domain::strip, Representation::closed_form, 0.0};
  double v = convolve_kernel(ok, one, 0.0, 1.0, 1e-9);
  CHECK(v == doctest::Approx((kPi - 1.0) / kPi).epsilon(1e-8));
  // Error reporting channel.
  double err = -1.0;
  convolve_kernel(strip_r(1.0), one, 0.0, 1.0, 1e-8, &err);
  CHECK(err >= 0.0);
  CHECK(err <= 1e-8);
}

TEST_CASE("multithreaded grid solve matches single-threaded") {
  auto g = boundary_gaussian(0.0, 0.7);
  auto zero = boundary_constant(0.0);
  GridSpec spec{-1.0, 1.0, 5, 0.0, kPi, 4};
  FieldGrid f1 = solve_strip(g, zero, spec, 0.8, 1e-8, 1);
  FieldGrid f2 = solve_strip(g, zero, spec, 0.8, 1e-8, 4);
  REQUIRE(f1.values.size() == f2.values.size());
  for (std::size_t i = 0; i < f1.values.size(); ++i)
    CHECK(f1.values[i] == f2.values[i]);
}

}  // TEST_SUITE
