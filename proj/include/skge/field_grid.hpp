// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

namespace skge {

// Rectangular evaluation lattice: nx columns spanning [x_min, x_max] and
// ny rows spanning [y_min, y_max], both inclusive.
struct GridSpec {
  double x_min = 0.0;
  double x_max = 0.0;
  std::size_t nx = 0;
  double y_min = 0.0;
  double y_max = 0.0;
  std::size_t ny = 0;
};

// Field values on a tensor grid, row-major with y as the outer index:
// values[iy * xs.size() + ix]. err_estimates is either empty or parallel
// to values. partial marks fields where at least one point missed its
// accuracy target (its cell then holds the best available estimate).
struct FieldGrid {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> values;
  std::vector<double> err_estimates;
  bool partial = false;

  std::size_t nx() const { return xs.size(); }
  std::size_t ny() const { return ys.size(); }
  double& at(std::size_t ix, std::size_t iy) {
    return values[iy * xs.size() + ix];
  }
  double at(std::size_t ix, std::size_t iy) const {
    return values[iy * xs.size() + ix];
  }
};

// Evenly spaced axis with exact endpoints.
std::vector<double> linspace(double lo, double hi, std::size_t n);

// Materializes the axes of a GridSpec. Throws domain_error for fewer than
// two points per axis or a non-increasing span.
FieldGrid make_grid(const GridSpec& spec);

// Writes "x,y,value,err_est" rows (y-outer order) with 17 significant
// digits; non-finite values are written as "nan". A missing err_estimates
// vector writes zeros.
void write_csv(const FieldGrid& grid, std::ostream& os);

// Bilinear interpolation for discretely known fields (oracle output).
// Throws domain_error outside the grid rectangle.
double bilinear(const FieldGrid& grid, double x, double y);

}  // namespace skge
