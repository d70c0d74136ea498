// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#include "skge/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>

#include "skge/errors.hpp"

namespace skge::fd {
namespace {

void validate_problem(const FdProblem& p, double lin_tol) {
  const auto& c = p.coeffs;
  if (!std::isfinite(c.sigma1) || !std::isfinite(c.sigma2) ||
      !std::isfinite(c.rho) || !std::isfinite(c.alpha1) ||
      !std::isfinite(c.alpha2) || !std::isfinite(c.r))
    throw domain_error("fd oracle: non-finite coefficient");
  if (!(c.sigma1 > 0.0) || !(c.sigma2 > 0.0) || std::fabs(c.rho) >= 1.0)
    throw ellipticity_error("fd oracle: operator is not uniformly elliptic");
  if (c.r < 0.0) throw domain_error("fd oracle: negative mass parameter");
  if (!(p.h > 0.0) || !std::isfinite(p.h) || !std::isfinite(p.x_lo) ||
      !std::isfinite(p.y_lo))
    throw domain_error("fd oracle: bad lattice geometry");
  if (p.nx < 3 || p.ny < 3)
    throw domain_error("fd oracle: needs at least one interior node per axis");
  if (p.bottom.size() != p.nx || p.top.size() != p.nx ||
      p.left.size() != p.ny || p.right.size() != p.ny)
    throw shape_error("fd oracle: edge vector sizes do not match the lattice");
  if (!(lin_tol > 0.0) || !std::isfinite(lin_tol))
    throw domain_error("fd oracle: linear tolerance must be positive");
  // Centered differences lose their accuracy (and BiCGSTAB its robustness)
  // once the drift dominates a cell or the cross term dominates the axes.
  if (std::fabs(c.rho) > 0.6)
    throw stability_error("fd oracle: |rho| > 0.6 unsupported by the stencil");
  if (p.h * std::fabs(c.alpha1) > 2.0 * c.sigma1 * c.sigma1 ||
      p.h * std::fabs(c.alpha2) > 2.0 * c.sigma2 * c.sigma2)
    throw stability_error("fd oracle: cell Peclet number above 2; refine h");
}

}  // namespace

FieldGrid assemble_and_solve(const FdProblem& p, double lin_tol) {
  validate_problem(p, lin_tol);
  const auto& c = p.coeffs;
  const std::size_t nx = p.nx, ny = p.ny;
  const std::size_t mx = nx - 2, my = ny - 2;
  const Eigen::Index n = static_cast<Eigen::Index>(mx * my);

  const double h2 = p.h * p.h;
  const double sxx = c.sigma1 * c.sigma1 / h2;
  const double syy = c.sigma2 * c.sigma2 / h2;
  const double sxy = c.rho * c.sigma1 * c.sigma2 / (2.0 * h2);
  const double ax = c.alpha1 / (2.0 * p.h);
  const double ay = c.alpha2 / (2.0 * p.h);
  const double center = -2.0 * sxx - 2.0 * syy - c.r * c.r;

  // Stencil weights by (di, dj) offset; dj is the y direction.
  struct Tap {
    int di, dj;
    double w;
  };
  const Tap taps[9] = {
      {0, 0, center},     {1, 0, sxx + ax},  {-1, 0, sxx - ax},
      {0, 1, syy + ay},   {0, -1, syy - ay}, {1, 1, sxy},
      {-1, -1, sxy},      {1, -1, -sxy},     {-1, 1, -sxy},
  };

  auto edge_value = [&](std::size_t i, std::size_t j) {
    if (j == 0) return p.bottom[i];
    if (j == ny - 1) return p.top[i];
    if (i == 0) return p.left[j];
    return p.right[j];
  };

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(n) * 9);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  for (std::size_t j = 1; j + 1 < ny; ++j) {
    for (std::size_t i = 1; i + 1 < nx; ++i) {
      const Eigen::Index row =
          static_cast<Eigen::Index>((j - 1) * mx + (i - 1));
      for (const Tap& t : taps) {
        if (t.w == 0.0 && (t.di != 0 || t.dj != 0)) continue;
        const std::size_t in = i + t.di, jn = j + t.dj;
        if (in == 0 || in == nx - 1 || jn == 0 || jn == ny - 1) {
          rhs[row] -= t.w * edge_value(in, jn);
        } else {
          const Eigen::Index col =
              static_cast<Eigen::Index>((jn - 1) * mx + (in - 1));
          trips.emplace_back(row, col, t.w);
        }
      }
    }
  }

  Eigen::SparseMatrix<double, Eigen::RowMajor> A(n, n);
  A.setFromTriplets(trips.begin(), trips.end());

  Eigen::BiCGSTAB<Eigen::SparseMatrix<double, Eigen::RowMajor>> solver;
  solver.setTolerance(lin_tol / 4.0);
  solver.setMaxIterations(std::max<Eigen::Index>(20000, 4 * n));
  solver.compute(A);
  Eigen::VectorXd sol = solver.solve(rhs);
  const double rhs_norm = rhs.norm();
  const double resid = (A * sol - rhs).norm();
  if (!(resid <= lin_tol * std::max(rhs_norm, 1e-300)))
    throw solver_error("fd oracle: linear solve missed its residual target");

  FieldGrid g;
  g.xs.resize(nx);
  g.ys.resize(ny);
  for (std::size_t i = 0; i < nx; ++i)
    g.xs[i] = p.x_lo + p.h * static_cast<double>(i);
  for (std::size_t j = 0; j < ny; ++j)
    g.ys[j] = p.y_lo + p.h * static_cast<double>(j);
  g.values.assign(nx * ny, 0.0);
  for (std::size_t i = 0; i < nx; ++i) {
    g.values[i] = p.bottom[i];
    g.values[(ny - 1) * nx + i] = p.top[i];
  }
  for (std::size_t j = 1; j + 1 < ny; ++j) {
    g.values[j * nx] = p.left[j];
    g.values[j * nx + (nx - 1)] = p.right[j];
    for (std::size_t i = 1; i + 1 < nx; ++i)
      g.values[j * nx + i] = sol[static_cast<Eigen::Index>((j - 1) * mx +
                                                           (i - 1))];
  }
  return g;
}

OracleReport compare_fields(const FieldGrid& a, const FieldGrid& b,
                            double tol) {
  if (a.nx() != b.nx() || a.ny() != b.ny())
    throw shape_error("compare_fields: lattice sizes differ");
  auto same_axis = [](const std::vector<double>& u,
                      const std::vector<double>& v) {
    for (std::size_t k = 0; k < u.size(); ++k) {
      double scale = std::max({1.0, std::fabs(u[k]), std::fabs(v[k])});
      if (std::fabs(u[k] - v[k]) > 1e-9 * scale) return false;
    }
    return true;
  };
  if (!same_axis(a.xs, b.xs) || !same_axis(a.ys, b.ys))
    throw shape_error("compare_fields: lattice coordinates differ");
  if (!(tol >= 0.0)) throw domain_error("compare_fields: negative tolerance");

  OracleReport rep;
  double sum_sq = 0.0;
  for (std::size_t j = 0; j < a.ny(); ++j) {
    for (std::size_t i = 0; i < a.nx(); ++i) {
      double d = std::fabs(a.at(i, j) - b.at(i, j));
      sum_sq += d * d;
      if (d > rep.max_abs_diff) {
        rep.max_abs_diff = d;
        rep.worst_x = a.xs[i];
        rep.worst_y = a.ys[j];
      }
    }
  }
  rep.rms_diff = std::sqrt(sum_sq / static_cast<double>(a.nx() * a.ny()));
  rep.pass = rep.max_abs_diff <= tol;
  return rep;
}

FieldGrid subsample(const FieldGrid& g, std::size_t stride_x,
                    std::size_t stride_y) {
  if (stride_x == 0 || stride_y == 0)
    throw domain_error("subsample: strides must be positive");
  if (g.nx() < 2 || g.ny() < 2)
    throw shape_error("subsample: field too small");
  if ((g.nx() - 1) % stride_x != 0 || (g.ny() - 1) % stride_y != 0)
    throw shape_error("subsample: strides do not divide the cell counts");
  FieldGrid out;
  for (std::size_t i = 0; i < g.nx(); i += stride_x) out.xs.push_back(g.xs[i]);
  for (std::size_t j = 0; j < g.ny(); j += stride_y) out.ys.push_back(g.ys[j]);
  out.values.reserve(out.xs.size() * out.ys.size());
  const bool has_err = !g.err_estimates.empty();
  for (std::size_t j = 0; j < g.ny(); j += stride_y) {
    for (std::size_t i = 0; i < g.nx(); i += stride_x) {
      out.values.push_back(g.at(i, j));
      if (has_err) out.err_estimates.push_back(g.err_estimates[j * g.nx() + i]);
    }
  }
  out.partial = g.partial;
  return out;
}

namespace {

// The half-width in cells: snap to the nearest lattice node when
// half_width already sits on one (so nested refinements double exactly),
// otherwise round up.
std::size_t half_cells(double half_width, double h) {
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw domain_error("fd oracle: half_width must be positive");
  double z = half_width / h;
  double r = std::round(z);
  if (std::fabs(z - r) <= 1e-9 * std::max(1.0, z))
    return static_cast<std::size_t>(r);
  return static_cast<std::size_t>(std::ceil(z));
}

}  // namespace

FdProblem make_strip_fd_problem(const elliptic::EllipticCoefficients& c,
                                const BoundaryFunction& phi,
                                double half_width, std::size_t ny_cells) {
  (void)elliptic::derive_change_of_variables(c);  // validate coefficients
  if (ny_cells < 2) throw domain_error("fd oracle: ny_cells must be >= 2");
  if (!phi.has_constant_tails())
    throw domain_error(
        "fd oracle: strip side columns need declared constant tails");
  FdProblem p;
  p.coeffs = c;
  p.h = c.width_l / static_cast<double>(ny_cells);
  const std::size_t m = half_cells(half_width, p.h);
  p.x_lo = -p.h * static_cast<double>(m);
  p.y_lo = 0.0;
  p.nx = 2 * m + 1;
  p.ny = ny_cells + 1;
  p.bottom.resize(p.nx);
  p.top.assign(p.nx, 0.0);
  for (std::size_t i = 0; i < p.nx; ++i)
    p.bottom[i] = phi(p.x_lo + p.h * static_cast<double>(i));
  p.left.resize(p.ny);
  p.right.resize(p.ny);
  for (std::size_t j = 0; j < p.ny; ++j) {
    double mass = elliptic::strip_general_mass(
        c, std::min(p.h * static_cast<double>(j), c.width_l));
    p.left[j] = phi.left_constant * mass;
    p.right[j] = phi.right_constant * mass;
  }
  return p;
}

FdProblem make_halfplane_fd_problem(const elliptic::EllipticCoefficients& c,
                                    const BoundaryFunction& phi,
                                    double half_width, double y_hi,
                                    std::size_t ny_cells,
                                    const std::vector<double>& top_values) {
  (void)elliptic::derive_change_of_variables(c);
  if (ny_cells < 2) throw domain_error("fd oracle: ny_cells must be >= 2");
  if (!(y_hi > 0.0) || !std::isfinite(y_hi))
    throw domain_error("fd oracle: y_hi must be positive");
  if (!phi.has_constant_tails())
    throw domain_error(
        "fd oracle: half-plane side columns need declared constant tails");
  FdProblem p;
  p.coeffs = c;
  p.h = y_hi / static_cast<double>(ny_cells);
  const std::size_t m = half_cells(half_width, p.h);
  p.x_lo = -p.h * static_cast<double>(m);
  p.y_lo = 0.0;
  p.nx = 2 * m + 1;
  p.ny = ny_cells + 1;
  if (!top_values.empty() && top_values.size() != p.nx)
    throw shape_error("fd oracle: top_values size does not match the lattice");
  p.bottom.resize(p.nx);
  for (std::size_t i = 0; i < p.nx; ++i)
    p.bottom[i] = phi(p.x_lo + p.h * static_cast<double>(i));
  p.top = top_values.empty() ? std::vector<double>(p.nx, 0.0) : top_values;
  p.left.resize(p.ny);
  p.right.resize(p.ny);
  for (std::size_t j = 0; j < p.ny; ++j) {
    double mass =
        elliptic::halfplane_general_mass(c, p.h * static_cast<double>(j));
    p.left[j] = phi.left_constant * mass;
    p.right[j] = phi.right_constant * mass;
  }
  return p;
}

}  // namespace skge::fd
