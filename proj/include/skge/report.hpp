// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

namespace skge {

// Outcome of comparing two sets of values (identity check, field-versus-
// oracle comparison, mean-value test). Relative deviations are measured
// against max(|a|, |b|) and skipped where both values are below 1e-13.
struct OracleReport {
  std::string description;
  double tolerance = 0.0;
  std::size_t n_points = 0;
  double max_abs_dev = 0.0;
  double mean_abs_dev = 0.0;
  double max_rel_dev = 0.0;
  double mean_rel_dev = 0.0;
  bool pass = false;

  void add(double a, double b) {
    double dev = std::fabs(a - b);
    ++n_points;
    max_abs_dev = std::max(max_abs_dev, dev);
    mean_abs_dev += dev;
    double denom = std::max(std::fabs(a), std::fabs(b));
    if (denom > 1e-13) {
      double rel = dev / denom;
      max_rel_dev = std::max(max_rel_dev, rel);
      mean_rel_dev += rel;
    }
  }

  // Divides the accumulated means and sets pass from the max absolute
  // deviation. Call once after the last add().
  void finalize() {
    if (n_points > 0) {
      mean_abs_dev /= static_cast<double>(n_points);
      mean_rel_dev /= static_cast<double>(n_points);
    }
    pass = (max_abs_dev <= tolerance);
  }
};

}  // namespace skge
