// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.

#include "skge/specfun.hpp"

#include <quadmath.h>

#include <cmath>
#include <limits>
#include <string>

#include "skge/errors.hpp"

namespace skge::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Euler-Mascheroni constant as a two-double sum; the pair is accurate to
// ~2e-34, enough for the quad-precision ascending branch.
constexpr double kEulerGammaHi = 0x1.2788cfc6fb619p-1;
constexpr double kEulerGammaLo = -0x1.6cb90701fbfabp-58;

void require_finite(double z, const char* who) {
  if (!std::isfinite(z)) {
    throw domain_error(std::string(who) + ": argument must be finite");
  }
}

// ---------------------------------------------------------------------------
// J0 / J1
// ---------------------------------------------------------------------------

// Hankel-expansion coefficients a_k = (4nu^2-1)(4nu^2-9)...(4nu^2-(2k-1)^2)
// / (k! 8^k), signs included; the expansion runs in powers of 1/z.
SpecFunResult j_hankel(int nu, double z) {
  const double four_nu_sq = 4.0 * nu * nu;
  const double invz = 1.0 / z;

  double p = 1.0;
  double q = 0.0;
  double a = 1.0;
  double pw = 1.0;
  double last = std::numeric_limits<double>::infinity();
  double trunc = 0.0;
  for (int k = 0; k < 60; ++k) {
    const double odd = 2.0 * k + 1.0;
    const double a_next = a * (four_nu_sq - odd * odd) / (8.0 * (k + 1.0));
    const double pw_next = pw * invz;
    const double term = a_next * pw_next;
    if (std::abs(term) >= std::abs(last)) {
      trunc = std::abs(last);  // asymptotic tail started diverging
      break;
    }
    const int kk = k + 1;
    const double sign = (kk / 2) % 2 == 0 ? 1.0 : -1.0;
    if (kk % 2 == 0) {
      p += sign * term;
    } else {
      q += sign * term;
    }
    a = a_next;
    pw = pw_next;
    last = term;
    trunc = std::abs(term);
    if (std::abs(term) < 0.5 * kEps) break;
  }

  const double amp = std::sqrt(2.0 / (M_PI * z));
  const double chi = z - (2.0 * nu + 1.0) * M_PI / 4.0;
  const double value = amp * (p * std::cos(chi) - q * std::sin(chi));
  const double err = amp * (2.0 * trunc + (std::abs(z) + 4.0) * kEps);
  return {value, err};
}

// Ascending series for I_n accumulated in long double; all terms positive,
// so relative accuracy stays near the accumulation epsilon.
long double i_series_raw(int n, long double z, long double* abs_scale) {
  const long double q = 0.25L * z * z;
  long double term;
  if (n == 0) {
    term = 1.0L;
  } else {
    term = expl(n * logl(0.5L * z) - lgammal((long double)n + 1.0L));
  }
  long double sum = term;
  for (int k = 1; k < 2000; ++k) {
    term *= q / ((long double)k * (k + n));
    sum += term;
    if (term < 1e-22L * sum) break;
  }
  if (abs_scale) *abs_scale = sum;
  return sum;
}

// ---------------------------------------------------------------------------
// K0 / K1 ascending branch, templated on the accumulation type.  The
// log(z/2) I_n(z) term cancels against the power sum, so the working type
// must carry roughly e^{2z} of headroom: long double up to z ~ 6, quad
// precision up to the asymptotic crossover.
// ---------------------------------------------------------------------------

inline long double ln_half(long double z) { return logl(0.5L * z); }
inline __float128 ln_half(__float128 z) { return logq((__float128)0.5 * z); }

template <class F>
struct FpMeta;
template <>
struct FpMeta<long double> {
  static long double euler_gamma() { return 0.57721566490153286060651209008L; }
  static constexpr double unit_roundoff = 1.1e-19;
};
template <>
struct FpMeta<__float128> {
  static __float128 euler_gamma() {
    return (__float128)kEulerGammaHi + (__float128)kEulerGammaLo;
  }
  static constexpr double unit_roundoff = 1.0e-33;
};

template <class F>
F fp_abs(F v) {
  return v < F(0) ? -v : v;
}

template <class F>
SpecFunResult k01_ascending_impl(int n, double zd) {
  const F z = (F)zd;
  const F q = F(0.25) * z * z;
  const F lg = ln_half(z);
  const F gamma = FpMeta<F>::euler_gamma();

  // I_0 or I_1 to the working precision.
  F i_term = n == 0 ? F(1) : F(0.5) * z;
  F i_sum = i_term;
  for (int k = 1; k < 2000; ++k) {
    i_term *= q / (F(k) * F(k + n));
    i_sum += i_term;
    if (i_term < F(1e-36) * i_sum) break;
  }

  F value;
  F mag;  // magnitude of the cancelling parts, for the roundoff estimate
  if (n == 0) {
    // K0 = -(log(z/2) + gamma) I0 + sum_{k>=1} q^k/(k!)^2 H_k
    F term = F(1);
    F h = F(0);
    F sum = F(0);
    for (int k = 1; k < 2000; ++k) {
      term *= q / (F(k) * F(k));
      h += F(1) / F(k);
      const F add = term * h;
      sum += add;
      if (add < F(1e-36) * (sum + F(1e-300))) break;
    }
    value = -(lg + gamma) * i_sum + sum;
    mag = fp_abs(lg + gamma) * i_sum + sum;
  } else {
    // K1 = 1/z + log(z/2) I1
    //      - (z/4) sum_{k>=0} (H_k + H_{k+1} - 2 gamma) q^k / (k! (k+1)!)
    F term = F(1);
    F hk = F(0);
    F hk1 = F(1);
    F sum = term * (hk + hk1 - F(2) * gamma);
    F abs_sum = fp_abs(sum);
    for (int k = 1; k < 2000; ++k) {
      term *= q / (F(k) * F(k + 1));
      hk += F(1) / F(k);
      hk1 += F(1) / F(k + 1);
      const F add = term * (hk + hk1 - F(2) * gamma);
      sum += add;
      abs_sum += fp_abs(add);
      if (fp_abs(add) < F(1e-36) * (abs_sum + F(1e-300))) break;
    }
    value = F(1) / z + lg * i_sum - F(0.25) * z * sum;
    mag = F(1) / z + fp_abs(lg) * i_sum + F(0.25) * z * abs_sum;
  }
  const double v = (double)value;
  const double err =
      (double)mag * FpMeta<F>::unit_roundoff + kEps * std::abs(v);
  return {v, err};
}

constexpr double kKAscendingLongDoubleMax = 6.0;

}  // namespace

namespace detail {

SpecFunResult j0_power_series(double z) {
  const long double q = 0.25L * (long double)z * z;
  long double term = 1.0L;
  long double sum = 1.0L;
  long double abs_sum = 1.0L;
  for (int k = 1; k < 400; ++k) {
    term *= -q / ((long double)k * k);
    sum += term;
    abs_sum += fp_abs(term);
    if (fp_abs(term) < 1e-22L * abs_sum) break;
  }
  return {(double)sum,
          (double)(abs_sum * 1.1e-19L) + kEps * std::abs((double)sum)};
}

SpecFunResult j1_power_series(double z) {
  const long double q = 0.25L * (long double)z * z;
  long double term = 0.5L * z;
  long double sum = term;
  long double abs_sum = fp_abs(term);
  for (int k = 1; k < 400; ++k) {
    term *= -q / ((long double)k * (k + 1));
    sum += term;
    abs_sum += fp_abs(term);
    if (fp_abs(term) < 1e-22L * abs_sum) break;
  }
  return {(double)sum,
          (double)(abs_sum * 1.1e-19L) + kEps * std::abs((double)sum)};
}

SpecFunResult j0_hankel_asymptotic(double z) { return j_hankel(0, z); }
SpecFunResult j1_hankel_asymptotic(double z) { return j_hankel(1, z); }

SpecFunResult k01_ascending_series(int n, double z) {
  if (z <= kKAscendingLongDoubleMax) {
    return k01_ascending_impl<long double>(n, z);
  }
  return k01_ascending_impl<__float128>(n, z);
}

SpecFunResult k01_asymptotic(int n, double z) {
  // K_n(z) ~ sqrt(pi/2z) e^{-z} sum_k a_k / z^k with the same signed a_k
  // as the Hankel expansion; the remainder is bounded by the first omitted
  // term, minimized near k ~ 2z.
  const double four_nu_sq = 4.0 * n * n;
  const double invz = 1.0 / z;
  double a = 1.0;
  double pw = 1.0;
  double sum = 1.0;
  double last = std::numeric_limits<double>::infinity();
  double trunc = 0.0;
  for (int k = 0; k < 80; ++k) {
    const double odd = 2.0 * k + 1.0;
    a *= (four_nu_sq - odd * odd) / (8.0 * (k + 1.0));
    pw *= invz;
    const double term = a * pw;
    if (std::abs(term) >= std::abs(last)) {
      trunc = std::abs(last);
      break;
    }
    sum += term;
    last = term;
    trunc = std::abs(term);
    if (std::abs(term) < 0.5 * kEps * std::abs(sum)) break;
  }
  const long double amp =
      sqrtl((long double)M_PI / (2.0L * z)) * expl(-(long double)z);
  const double value = (double)(amp * sum);
  const double err = (double)(amp * (trunc + 4.0 * kEps * std::abs(sum)));
  return {value, err};
}

}  // namespace detail

SpecFunResult bessel_j0_detailed(double z) {
  require_finite(z, "bessel_j0");
  const double az = std::abs(z);
  if (az > 1e4) {
    throw range_error("bessel_j0: |z| > 1e4 unsupported");
  }
  if (az <= detail::j_series_crossover) return detail::j0_power_series(az);
  return detail::j0_hankel_asymptotic(az);
}

SpecFunResult bessel_j1_detailed(double z) {
  require_finite(z, "bessel_j1");
  const double az = std::abs(z);
  if (az > 1e4) {
    throw range_error("bessel_j1: |z| > 1e4 unsupported");
  }
  SpecFunResult r = az <= detail::j_series_crossover
                        ? detail::j1_power_series(az)
                        : detail::j1_hankel_asymptotic(az);
  if (z < 0.0) r.value = -r.value;
  return r;
}

double bessel_j0(double z) { return bessel_j0_detailed(z).value; }
double bessel_j1(double z) { return bessel_j1_detailed(z).value; }

SpecFunResult bessel_i_detailed(int n, double z) {
  require_finite(z, "bessel_i");
  if (n < 0 || z < 0.0) {
    throw domain_error("bessel_i: requires n >= 0 and z >= 0");
  }
  if (n > 200 || z > 700.0) {
    throw range_error("bessel_i: supported range is n <= 200, z <= 700");
  }
  if (z == 0.0) return {n == 0 ? 1.0 : 0.0, 0.0};
  long double scale = 0.0L;
  const long double sum = i_series_raw(n, z, &scale);
  return {(double)sum,
          (double)(scale * 1.1e-19L) + kEps * std::abs((double)sum)};
}

double bessel_i(int n, double z) { return bessel_i_detailed(n, z).value; }

SpecFunResult bessel_k_detailed(int n, double z) {
  require_finite(z, "bessel_k");
  if (n < 0) throw domain_error("bessel_k: requires n >= 0");
  if (!(z > 0.0)) throw domain_error("bessel_k: requires z > 0");

  auto k01 = [&](int m) -> SpecFunResult {
    SpecFunResult r = z <= detail::k_series_crossover
                          ? detail::k01_ascending_series(m, z)
                          : detail::k01_asymptotic(m, z);
    if (!std::isfinite(r.value)) {
      throw range_error("bessel_k: value overflows double");
    }
    return r;
  };

  if (n <= 1) return k01(n);

  // Upward recurrence K_{j+1} = K_{j-1} + (2j/z) K_j; both contributions
  // are positive, so the forward error stays a small multiple of the value.
  SpecFunResult k0 = k01(0);
  SpecFunResult k1 = k01(1);
  double prev = k0.value;
  double cur = k1.value;
  double err = k0.abs_error + k1.abs_error;
  for (int j = 1; j < n; ++j) {
    const double next = prev + (2.0 * j / z) * cur;
    if (!std::isfinite(next)) {
      throw range_error("bessel_k: overflow in upward recurrence");
    }
    err = err * (1.0 + 2.0 * j / z) + kEps * next;
    prev = cur;
    cur = next;
  }
  return {cur, err};
}

double bessel_k(int n, double z) { return bessel_k_detailed(n, z).value; }

double bessel_i_ratio(int n, double z_num, double z_den) {
  require_finite(z_num, "bessel_i_ratio");
  require_finite(z_den, "bessel_i_ratio");
  if (n < 0 || z_num < 0.0 || !(z_den > 0.0) || z_num > z_den) {
    throw domain_error(
        "bessel_i_ratio: requires n >= 0 and 0 <= z_num <= z_den");
  }
  if (z_num == 0.0) {
    if (n > 0) return 0.0;
    return 1.0 / (double)i_series_raw(0, z_den, nullptr);
  }

  // Normalized series S(z) = sum_k q^k / (k! (n+1)...(n+k)); the common
  // prefactor (z/2)^n / n! cancels in the ratio, so no underflow at large n.
  auto normalized = [&](long double z) {
    const long double q = 0.25L * z * z;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 2000; ++k) {
      term *= q / ((long double)k * (k + n));
      sum += term;
      if (term < 1e-22L * sum) break;
    }
    return sum;
  };
  const double base = std::pow(z_num / z_den, n);
  return base * (double)(normalized(z_num) / normalized(z_den));
}

}  // namespace skge::specfun
