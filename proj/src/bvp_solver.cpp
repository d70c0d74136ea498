// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#include "skge/bvp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

#include "skge/errors.hpp"
#include "skge/halfplane_kernel.hpp"
#include "skge/quadrature.hpp"
#include "skge/strip_kernel.hpp"

namespace skge {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Kernel evaluations cannot be pushed below the quadrature roundoff floor
// of the integral representation; the error accounting uses this floor.
constexpr double kKernelTolFloor = 4e-14;

double eval_strip_kernel(Representation rep, double xi, double y, double r,
                         double tol_k) {
  strip::StripKernelPoint p{xi, y, r};
  switch (rep) {
    case Representation::automatic:
      return strip::green_strip(p, tol_k);
    case Representation::series:
      return strip::green_strip_series(p, tol_k);
    case Representation::integral:
      return strip::green_strip_integral(p, tol_k);
    case Representation::via_j1:
      return strip::green_strip_via_j1(p, tol_k);
    case Representation::closed_form:
      if (r != 0.0)
        throw domain_error(
            "strip kernel: closed form exists only for r = 0");
      return strip::green_strip_laplace(xi, y);
  }
  throw domain_error("strip kernel: unknown representation");
}

double eval_halfplane_kernel(Representation rep, double xi, double y, double r,
                             double tol_k) {
  halfplane::HalfplaneKernelPoint p{xi, y, r};
  switch (rep) {
    case Representation::automatic:
    case Representation::closed_form:
      return halfplane::green_halfplane_closed(p);
    case Representation::integral:
      return halfplane::green_halfplane_integral(p, tol_k);
    case Representation::series:
    case Representation::via_j1:
      throw domain_error(
          "half-plane kernel: only closed-form and integral "
          "representations exist");
  }
  throw domain_error("half-plane kernel: unknown representation");
}

struct TailPlan {
  double xi = 0.0;        // truncation radius (one side)
  double compensation = 0.0;  // declared constant times tail mass
  double err = 0.0;       // bound on what the plan leaves unaccounted
};

// Chooses the truncation radius for one side of a symmetric-kernel
// convolution. With declared constant tails the compensation is exact once
// x +- Xi clears the compact interval; otherwise Xi grows until the
// leftover sup * H(Xi) fits the budget.
TailPlan plan_tail(const std::function<double(double, double)>& tail_mass,
                   const BoundaryFunction& phi, double tail_constant,
                   double absx, double budget, double sup) {
  TailPlan plan;
  if (phi.has_constant_tails()) {
    plan.xi = phi.compact_radius + absx + 1.0;
    if (tail_constant != 0.0) {
      double htol = budget / (2.0 * std::fabs(tail_constant));
      plan.compensation = tail_constant * tail_mass(plan.xi, htol);
      plan.err = budget / 2.0;
    }
    return plan;
  }
  double xi = 2.0;
  double leftover = sup * tail_mass(xi, 0.01 * budget / std::max(sup, 1e-30));
  while (leftover > budget && xi < 1e6) {
    xi *= 1.5;
    leftover = sup * tail_mass(xi, 0.01 * budget / std::max(sup, 1e-30));
  }
  plan.xi = xi;
  plan.err = leftover;
  return plan;
}

}  // namespace

double convolve_kernel(const KernelSpec& kernel, const BoundaryFunction& phi,
                       double x, double y, double tol, double* err_out) {
  if (!std::isfinite(x) || !std::isfinite(y))
    throw domain_error("convolve: non-finite evaluation point");
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw domain_error("convolve: tolerance must be positive");
  if (kernel.r < 0.0)
    throw domain_error("convolve: negative mass parameter");
  const bool is_strip = kernel.domain == Domain::strip;
  if (is_strip) {
    if (y < 0.0 || y > kPi) throw domain_error("convolve: y outside [0, pi]");
  } else if (y < 0.0) {
    throw domain_error("convolve: y must be >= 0");
  }
  if (err_out) *err_out = 0.0;
  if (y == 0.0) return phi(x);
  if (is_strip && y == kPi) return 0.0;

  const double sup = phi.sup_bound;
  if (sup == 0.0) return 0.0;
  const double r = kernel.r;

  auto tail_mass = [&](double xi, double htol) {
    return is_strip ? strip::strip_tail_mass(xi, y, r, htol)
                    : halfplane::halfplane_tail_mass(xi, y, r, htol);
  };

  // Both sides share one radius: the kernel is even, so the larger of the
  // two compact-clearance radii serves both, and H(Xi) is computed once.
  const double absx = std::fabs(x);
  const double budget_tail = tol / 4.0;
  TailPlan right = plan_tail(tail_mass, phi, phi.right_constant, absx,
                             budget_tail / 2.0, sup);
  TailPlan left = plan_tail(tail_mass, phi, phi.left_constant, absx,
                            budget_tail / 2.0, sup);
  const double xi_max = std::max(right.xi, left.xi);
  double compensation = 0.0;
  double tail_err = 0.0;
  if (phi.has_constant_tails()) {
    const double both = phi.left_constant + phi.right_constant;
    if (both != 0.0) {
      double htol = budget_tail / (2.0 * std::fabs(both));
      compensation = both * tail_mass(xi_max, htol);
      tail_err = budget_tail / 2.0;
    }
  } else {
    compensation = 0.0;
    tail_err = right.err + left.err;
  }

  const double tol_k = std::max(
      tol / (4.0 * std::max(1.0, 2.0 * xi_max * sup)), kKernelTolFloor);
  // Kernel evaluations that miss tol_k (possible hard against the boundary,
  // where the peak forces relative accuracy beyond double precision) are
  // absorbed: the best estimate enters the integrand and the worst achieved
  // error replaces tol_k in the error accounting.
  double kernel_excess = 0.0;
  auto f = [&](double xi) {
    double g;
    try {
      g = is_strip ? eval_strip_kernel(kernel.rep, xi, y, r, tol_k)
                   : eval_halfplane_kernel(kernel.rep, xi, y, r, tol_k);
    } catch (const accuracy_error& e) {
      g = e.best_estimate();
      kernel_excess = std::max(kernel_excess, e.achieved_error());
    }
    return (phi(x + xi) + phi(x - xi)) * g;
  };
  const double yhat = is_strip ? std::min(y, kPi - y) : std::min(y, 1.0);
  std::vector<double> pts = quad::graded_points(0.0, xi_max, yhat);
  // The symmetrized integrand loses smoothness at xi = |x - u| for every
  // declared breakpoint u of phi; those must be segment boundaries, not
  // panel interiors, or the panel estimate cannot see them.
  for (double u : phi.breakpoints) {
    const double bp = std::fabs(x - u);
    if (bp > 0.0 && bp < xi_max) pts.push_back(bp);
  }
  std::sort(pts.begin(), pts.end());
  // The outer quadrature cannot resolve below the kernel noise floor, so
  // its budget is clamped there; an infeasible tol then fails fast with the
  // honest bound instead of grinding through futile refinement.
  const double kernel_term = 2.0 * xi_max * sup * tol_k;
  const double quad_budget = std::max(tol / 4.0, kernel_term);

  double value, quad_err;
  try {
    quad::QuadResult q = quad::integrate_segmented(f, pts, quad_budget);
    value = q.value;
    quad_err = q.abs_error;
  } catch (const accuracy_error& e) {
    double kterm = 2.0 * xi_max * sup * std::max(tol_k, kernel_excess);
    double best = e.best_estimate() + compensation;
    double achieved = e.achieved_error() + tail_err + kterm;
    if (err_out) *err_out = achieved;
    throw accuracy_error("convolve: quadrature budget not met", best,
                         achieved);
  }
  double total_err = quad_err + tail_err +
                     2.0 * xi_max * sup * std::max(tol_k, kernel_excess);
  if (err_out) *err_out = total_err;
  if (total_err > tol) {
    throw accuracy_error("convolve: error budget exceeded",
                         value + compensation, total_err);
  }
  return value + compensation;
}

double convolve_general(const elliptic::EllipticCoefficients& c, Domain dom,
                        const BoundaryFunction& phi, double x, double y,
                        double tol, double* err_out) {
  const elliptic::DerivedChangeOfVariables d =
      elliptic::derive_change_of_variables(c);
  if (!std::isfinite(x) || !std::isfinite(y))
    throw domain_error("convolve: non-finite evaluation point");
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw domain_error("convolve: tolerance must be positive");
  const bool is_strip = dom == Domain::strip;
  if (is_strip) {
    if (y < 0.0 || y > c.width_l)
      throw domain_error("convolve: y outside [0, width]");
  } else if (y < 0.0) {
    throw domain_error("convolve: y must be >= 0");
  }
  if (err_out) *err_out = 0.0;
  if (y == 0.0) return phi(x);
  if (is_strip && y == c.width_l) return 0.0;

  const double sup = phi.sup_bound;
  if (sup == 0.0) return 0.0;

  // V(x,y) = Int phi(u0 + w) K(w, y) dw in the sheared offset w = u - u0,
  // where K(w, y) is the general kernel written against its singular
  // column: K(w) = c e^{-rate y + beta w} G_canonical(c w, .).
  const double u0 = x - d.s_slope * y;
  const double ycan = is_strip ? kPi * y / c.width_l : y;
  const double cscale = is_strip ? d.c_strip : d.c_half;
  const double rhat = is_strip ? d.r_hat_strip : d.r_hat_half;
  const double wexp = -d.vertical_rate * y;

  // See convolve_kernel: kernel evaluations that cannot reach tol_k report
  // their best estimate, and the worst achieved error supersedes tol_k in
  // the final accounting.
  double kernel_excess = 0.0;
  auto kern = [&](double w, double tol_k) {
    double amp = cscale * std::exp(wexp + d.beta * w);
    if (is_strip) {
      strip::StripKernelPoint p{cscale * w, ycan, rhat};
      double inner = std::clamp(tol_k / std::max(amp, 1e-300), 1e-15, 1e2);
      try {
        return amp * strip::green_strip(p, inner);
      } catch (const accuracy_error& e) {
        kernel_excess = std::max(kernel_excess, amp * e.achieved_error());
        return amp * e.best_estimate();
      }
    }
    halfplane::HalfplaneKernelPoint p{cscale * w, ycan, rhat};
    return amp * halfplane::green_halfplane_closed(p);
  };
  auto tail_mass = [&](bool positive, double xi, double htol) {
    return is_strip
               ? elliptic::strip_general_tail_mass(c, xi, y, positive, htol)
               : elliptic::halfplane_general_tail_mass(c, xi, y, positive,
                                                       htol);
  };

  // One-sided truncation radii: the right tail constant is phi's right
  // constant when u0 + Xi clears the compact interval, and symmetrically.
  const double budget_tail = tol / 8.0;
  auto plan_side = [&](bool positive) {
    TailPlan plan;
    double clearance = phi.has_constant_tails()
                           ? phi.compact_radius +
                                 (positive ? std::max(-u0, 0.0)
                                           : std::max(u0, 0.0)) +
                                 1.0
                           : 2.0;
    double tail_const =
        positive ? phi.right_constant : phi.left_constant;
    if (phi.has_constant_tails()) {
      plan.xi = clearance;
      if (tail_const != 0.0) {
        double htol = budget_tail / (2.0 * std::fabs(tail_const));
        plan.compensation = tail_const * tail_mass(positive, plan.xi, htol);
        plan.err = budget_tail / 2.0;
      }
      return plan;
    }
    double xi = clearance;
    double htol = 0.01 * budget_tail / std::max(sup, 1e-30);
    double leftover = sup * tail_mass(positive, xi, htol);
    while (leftover > budget_tail && xi < 1e6) {
      xi *= 1.5;
      leftover = sup * tail_mass(positive, xi, htol);
    }
    plan.xi = xi;
    plan.err = leftover;
    return plan;
  };
  TailPlan right = plan_side(true);
  TailPlan left = plan_side(false);

  const double span = right.xi + left.xi;
  const double tol_k = std::max(
      tol / (8.0 * std::max(1.0, span * sup)), kKernelTolFloor);
  const double scale_can =
      is_strip ? std::min(ycan, kPi - ycan) / cscale : ycan / cscale;

  auto side_integral = [&](bool positive, double xi_side) {
    auto f = [&](double w) {
      double ww = positive ? w : -w;
      return phi(u0 + ww) * kern(ww, tol_k);
    };
    std::vector<double> pts = quad::graded_points(0.0, xi_side, scale_can);
    // Declared breakpoints of phi map to w = +-(u - u0) on this side; see
    // convolve_kernel for why they must bound segments.
    for (double u : phi.breakpoints) {
      const double bp = positive ? u - u0 : u0 - u;
      if (bp > 0.0 && bp < xi_side) pts.push_back(bp);
    }
    std::sort(pts.begin(), pts.end());
    const double budget = std::max(tol / 8.0, xi_side * sup * tol_k);
    return quad::integrate_segmented(f, pts, budget);
  };

  const double compensation = right.compensation + left.compensation;
  const double tail_err = right.err + left.err;
  double value, quad_err;
  try {
    quad::QuadResult qr = side_integral(true, right.xi);
    quad::QuadResult ql = side_integral(false, left.xi);
    value = qr.value + ql.value;
    quad_err = qr.abs_error + ql.abs_error;
  } catch (const accuracy_error& e) {
    double kterm = span * sup * std::max(tol_k, kernel_excess);
    double best = e.best_estimate() + compensation;
    double achieved = e.achieved_error() + tail_err + kterm;
    if (err_out) *err_out = achieved;
    throw accuracy_error("convolve: quadrature budget not met", best,
                         achieved);
  }
  double total_err =
      quad_err + tail_err + span * sup * std::max(tol_k, kernel_excess);
  if (err_out) *err_out = total_err;
  if (total_err > tol) {
    throw accuracy_error("convolve: error budget exceeded",
                         value + compensation, total_err);
  }
  return value + compensation;
}

namespace {

// Shared grid loop: `one_point` computes (value, err) for one node and may
// throw accuracy_error, which marks the field partial and keeps the best
// estimate. Rows are distributed across threads when threads > 1.
FieldGrid run_grid(
    const GridSpec& spec, int threads,
    const std::function<double(double, double, double*)>& one_point) {
  FieldGrid g = make_grid(spec);
  const std::size_t nx = g.nx();
  const std::size_t ny = g.ny();
  std::vector<char> failed(ny, 0);
  auto work_row = [&](std::size_t iy) {
    double y = g.ys[iy];
    for (std::size_t ix = 0; ix < nx; ++ix) {
      double err = 0.0;
      double v;
      try {
        v = one_point(g.xs[ix], y, &err);
      } catch (const accuracy_error& e) {
        v = e.best_estimate();
        err = e.achieved_error();
        failed[iy] = 1;
      }
      g.values[iy * nx + ix] = v;
      g.err_estimates[iy * nx + ix] = err;
    }
  };
  int nthreads = std::max(threads, 1);
  if (nthreads == 1) {
    for (std::size_t iy = 0; iy < ny; ++iy) work_row(iy);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nthreads);
    std::size_t chunk = (ny + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t]() {
        try {
          std::size_t lo = t * chunk;
          std::size_t hi = std::min(ny, lo + chunk);
          for (std::size_t iy = lo; iy < hi; ++iy) work_row(iy);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (char fy : failed)
    if (fy) g.partial = true;
  return g;
}

}  // namespace

FieldGrid solve_strip(const BoundaryFunction& bottom,
                      const BoundaryFunction& top, const GridSpec& grid,
                      double r, double tol, int threads) {
  if (grid.y_min < 0.0 || grid.y_max > kPi + 1e-15)
    throw domain_error("solve_strip: grid outside the strip");
  if (!(tol > 0.0)) throw domain_error("solve_strip: tolerance");
  KernelSpec ks{Domain::strip, Representation::automatic, r};
  auto one_point = [&](double x, double y, double* err) {
    if (y == 0.0) return bottom(x);
    if (y == kPi) return top(x);
    double e1 = 0.0, e2 = 0.0;
    double v = 0.0;
    if (bottom.sup_bound != 0.0)
      v += convolve_kernel(ks, bottom, x, y, tol / 2.0, &e1);
    if (top.sup_bound != 0.0)
      v += convolve_kernel(ks, top, x, kPi - y, tol / 2.0, &e2);
    *err = e1 + e2;
    return v;
  };
  return run_grid(grid, threads, one_point);
}

FieldGrid solve_halfplane(const BoundaryFunction& phi, const GridSpec& grid,
                          double r, double tol, int threads) {
  if (grid.y_min < 0.0)
    throw domain_error("solve_halfplane: grid below the boundary");
  if (!(tol > 0.0)) throw domain_error("solve_halfplane: tolerance");
  KernelSpec ks{Domain::halfplane, Representation::automatic, r};
  auto one_point = [&](double x, double y, double* err) {
    if (y == 0.0) return phi(x);
    return convolve_kernel(ks, phi, x, y, tol, err);
  };
  return run_grid(grid, threads, one_point);
}

FieldGrid solve_strip_general(const BoundaryFunction& phi,
                              const GridSpec& grid,
                              const elliptic::EllipticCoefficients& c,
                              double tol, int threads) {
  (void)elliptic::derive_change_of_variables(c);  // validate early
  if (grid.y_min < 0.0 || grid.y_max > c.width_l + 1e-15)
    throw domain_error("solve_strip_general: grid outside the strip");
  if (!(tol > 0.0)) throw domain_error("solve_strip_general: tolerance");
  auto one_point = [&](double x, double y, double* err) {
    if (y == 0.0) return phi(x);
    if (y == c.width_l) return 0.0;
    return convolve_general(c, Domain::strip, phi, x, y, tol, err);
  };
  return run_grid(grid, threads, one_point);
}

FieldGrid solve_halfplane_general(const BoundaryFunction& phi,
                                  const GridSpec& grid,
                                  const elliptic::EllipticCoefficients& c,
                                  double tol, int threads) {
  (void)elliptic::derive_change_of_variables(c);
  if (grid.y_min < 0.0)
    throw domain_error("solve_halfplane_general: grid below the boundary");
  if (!(tol > 0.0)) throw domain_error("solve_halfplane_general: tolerance");
  auto one_point = [&](double x, double y, double* err) {
    if (y == 0.0) return phi(x);
    return convolve_general(c, Domain::halfplane, phi, x, y, tol, err);
  };
  return run_grid(grid, threads, one_point);
}

}  // namespace skge
