// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.

#pragma once

#include <stdexcept>
#include <string>

namespace skge {

// Base class for every error thrown by this library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Argument outside the mathematical domain of the operation
// (non-finite input, wrong sign, coordinate outside the strip, ...).
class domain_error : public error {
 public:
  using error::error;
};

// Argument inside the mathematical domain but outside the range this
// implementation supports (overflow guards, order caps).
class range_error : public error {
 public:
  using error::error;
};

// Evaluation requested exactly at a non-removable singularity.
class singularity_error : public error {
 public:
  using error::error;
};

// A series representation was requested where it does not converge.
class series_divergence_error : public error {
 public:
  using error::error;
};

// The requested tolerance could not be met; carries the best value
// obtained and the error bound actually achieved.
class accuracy_error : public error {
 public:
  accuracy_error(const std::string& what_arg, double best_estimate,
                 double achieved_error)
      : error(what_arg),
        best_estimate_(best_estimate),
        achieved_error_(achieved_error) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double best_estimate_;
  double achieved_error_;
};

// Coefficients do not define a uniformly elliptic operator (|rho| >= 1,
// non-positive diffusion).
class ellipticity_error : public error {
 public:
  using error::error;
};

// A discretization would violate its stability constraints (loss of
// diagonal dominance, unsupported correlation for the stencil).
class stability_error : public error {
 public:
  using error::error;
};

// An iterative or direct linear solve failed to converge.
class solver_error : public error {
 public:
  using error::error;
};

// Containers passed to an operation have inconsistent shapes or grids.
class shape_error : public error {
 public:
  using error::error;
};

}  // namespace skge
