// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.

#pragma once

namespace skge::specfun {

// Value plus a conservative absolute-error estimate for the evaluation
// itself (truncation of the chosen expansion plus accumulated roundoff).
struct SpecFunResult {
  double value = 0.0;
  double abs_error = 0.0;
};

// Bessel functions of the first kind, orders 0 and 1, real argument.
// Power series for |z| below the crossover, Hankel asymptotic expansion
// above; both branches hold better than 5e-14 relative accuracy on the
// overlap window around the crossover.  |z| <= 1e4 supported.
SpecFunResult bessel_j0_detailed(double z);
SpecFunResult bessel_j1_detailed(double z);
double bessel_j0(double z);
double bessel_j1(double z);

// Modified Bessel function of the first kind, integer order.
// pre: 0 <= n <= 200, 0 <= z <= 700 (overflow guard).
SpecFunResult bessel_i_detailed(int n, double z);
double bessel_i(int n, double z);

// Modified Bessel function of the second kind, integer order, z > 0.
// K0/K1 use the ascending series (extended-precision accumulation) below
// the crossover and the exponential asymptotic expansion above; higher
// orders by upward recurrence, which is forward-stable for K.
SpecFunResult bessel_k_detailed(int n, double z);
double bessel_k(int n, double z);

// I_n(z_num) / I_n(z_den) for 0 <= z_num <= z_den, computed from the
// ratio of normalized ascending series so it stays finite at orders where
// the individual values underflow.  Satisfies ratio <= (z_num/z_den)^n.
double bessel_i_ratio(int n, double z_num, double z_den);

namespace detail {

// Branch evaluators, exposed so tests can check agreement on the overlap
// windows that bracket each crossover.
SpecFunResult j0_power_series(double z);
SpecFunResult j1_power_series(double z);
SpecFunResult j0_hankel_asymptotic(double z);
SpecFunResult j1_hankel_asymptotic(double z);
SpecFunResult k01_ascending_series(int n, double z);   // n in {0, 1}
SpecFunResult k01_asymptotic(int n, double z);         // n in {0, 1}

inline constexpr double j_series_crossover = 14.0;
inline constexpr double k_series_crossover = 11.5;

}  // namespace detail

}  // namespace skge::specfun
