// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#pragma once

#include <cstddef>
#include <vector>

#include "skge/boundary.hpp"
#include "skge/field_grid.hpp"
#include "skge/general_elliptic.hpp"

namespace skge::fd {

// Dirichlet problem for the constant-coefficient operator on an
// axis-aligned rectangle, discretized on a uniform square lattice of
// spacing h: nx columns starting at x_lo, ny rows starting at y_lo.
// bottom/top hold nx samples along y = y_lo and y = y_lo + (ny-1) h,
// left/right hold ny samples along the vertical edges; the four corners
// are taken from bottom/top.
struct FdProblem {
  elliptic::EllipticCoefficients coeffs;
  double x_lo = 0.0;
  double y_lo = 0.0;
  double h = 0.0;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<double> bottom;
  std::vector<double> top;
  std::vector<double> left;
  std::vector<double> right;
};

// Second-order centered discretization on the 9-point stencil (the cross
// derivative uses the four diagonal neighbours over 4 h^2), assembled over
// the (nx-2)(ny-2) interior unknowns and solved with BiCGSTAB. This path
// shares no analysis with the kernel representations; it exists to check
// them. Throws stability_error when centered differences are not
// trustworthy (|rho| > 0.6, or a cell Peclet number h|alpha_i|/sigma_i^2
// above 2), solver_error when the relative residual misses lin_tol, and
// shape_error / domain_error on malformed problems.
FieldGrid assemble_and_solve(const FdProblem& p, double lin_tol);

// Largest and root-mean-square discrepancy between two fields on the same
// lattice. Throws shape_error when the lattices do not match.
struct OracleReport {
  double max_abs_diff = 0.0;
  double rms_diff = 0.0;
  double worst_x = 0.0;
  double worst_y = 0.0;
  bool pass = false;
};
OracleReport compare_fields(const FieldGrid& a, const FieldGrid& b,
                            double tol);

// Every stride-th node of a field, endpoints kept; the strides must divide
// the cell counts. Used to land nested refinements on a shared lattice.
FieldGrid subsample(const FieldGrid& g, std::size_t stride_x,
                    std::size_t stride_y);

// Strip problem on [-W, W] x [0, width_l] with h = width_l / ny_cells and
// W the smallest lattice multiple of h at or above half_width: data phi on
// the bottom edge, zero top, side columns pinned to the constant-data
// profile (phi's declared tail constants times the strip mass profile).
// Requires phi with constant tails; half_width should clear phi's compact
// radius by enough that the side-column error (tail constant times the
// kernel tail mass at the clearance) is below the comparison target.
FdProblem make_strip_fd_problem(const elliptic::EllipticCoefficients& c,
                                const BoundaryFunction& phi,
                                double half_width, std::size_t ny_cells);

// Half-plane analogue on [-W, W] x [0, y_hi] with h = y_hi / ny_cells.
// top_values supplies Dirichlet data along y = y_hi (size nx); empty means
// zero, valid when the mass profile at y_hi is negligible.
FdProblem make_halfplane_fd_problem(const elliptic::EllipticCoefficients& c,
                                    const BoundaryFunction& phi,
                                    double half_width, double y_hi,
                                    std::size_t ny_cells,
                                    const std::vector<double>& top_values = {});

}  // namespace skge::fd
