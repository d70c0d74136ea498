// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#include "skge/field_grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "skge/errors.hpp"

namespace skge {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw domain_error("linspace: need at least two points");
  if (!(hi > lo)) throw domain_error("linspace: span must be increasing");
  std::vector<double> v(n);
  double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo + static_cast<double>(i) * step;
  v.back() = hi;  // exact endpoint regardless of rounding
  return v;
}

FieldGrid make_grid(const GridSpec& spec) {
  FieldGrid g;
  g.xs = linspace(spec.x_min, spec.x_max, spec.nx);
  g.ys = linspace(spec.y_min, spec.y_max, spec.ny);
  g.values.assign(g.xs.size() * g.ys.size(), 0.0);
  g.err_estimates.assign(g.values.size(), 0.0);
  return g;
}

void write_csv(const FieldGrid& grid, std::ostream& os) {
  os << "x,y,value,err_est\n";
  char buf[32];
  auto put = [&](double v) {
    if (!std::isfinite(v)) {
      os << (std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf"));
      return;
    }
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
  };
  const bool have_err = grid.err_estimates.size() == grid.values.size();
  for (std::size_t iy = 0; iy < grid.ny(); ++iy) {
    for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
      put(grid.xs[ix]);
      os << ',';
      put(grid.ys[iy]);
      os << ',';
      put(grid.at(ix, iy));
      os << ',';
      put(have_err ? grid.err_estimates[iy * grid.nx() + ix] : 0.0);
      os << '\n';
    }
  }
}

double bilinear(const FieldGrid& grid, double x, double y) {
  if (grid.nx() < 2 || grid.ny() < 2)
    throw domain_error("bilinear: degenerate grid");
  const auto& xs = grid.xs;
  const auto& ys = grid.ys;
  if (x < xs.front() || x > xs.back() || y < ys.front() || y > ys.back())
    throw domain_error("bilinear: point outside the grid");
  auto cell = [](const std::vector<double>& a, double t) {
    auto it = std::upper_bound(a.begin(), a.end(), t);
    std::size_t hi = static_cast<std::size_t>(it - a.begin());
    if (hi == 0) hi = 1;
    if (hi == a.size()) hi = a.size() - 1;
    return hi - 1;
  };
  std::size_t i = cell(xs, x);
  std::size_t j = cell(ys, y);
  double tx = (x - xs[i]) / (xs[i + 1] - xs[i]);
  double ty = (y - ys[j]) / (ys[j + 1] - ys[j]);
  double v00 = grid.at(i, j), v10 = grid.at(i + 1, j);
  double v01 = grid.at(i, j + 1), v11 = grid.at(i + 1, j + 1);
  return (1 - tx) * (1 - ty) * v00 + tx * (1 - ty) * v10 +
         (1 - tx) * ty * v01 + tx * ty * v11;
}

}  // namespace skge
