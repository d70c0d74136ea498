// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.

#pragma once

#include <functional>
#include <vector>

namespace skge::quad {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;  // rigorous-style estimate, not a guess
};

// One application of the 15-point Kronrod rule with embedded 7-point Gauss
// rule on [a, b].  The error estimate follows the QUADPACK rescaling of
// |K15 - G7| against the scaled variation of the integrand.
QuadResult gauss_kronrod_15(const std::function<double(double)>& f, double a,
                            double b);

// Globally adaptive bisection driven by gauss_kronrod_15.  Splits the
// interval with the largest error estimate until the summed estimate is
// below abs_tol.  Throws accuracy_error (carrying the best value and the
// achieved bound) if max_intervals subdivisions do not suffice.
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol, int max_intervals = 4000);

// integrate() over the consecutive segments [pts[0],pts[1]], ...,
// [pts[n-2],pts[n-1]].  Breakpoints let callers pre-split around known
// scales (kernel peaks, oscillation periods) so adaption starts well.
// The tolerance is shared across segments proportionally to length.
QuadResult integrate_segmented(const std::function<double(double)>& f,
                               const std::vector<double>& pts, double abs_tol,
                               int max_intervals = 4000);

// Sum of an alternating sequence of panel integrals, accelerated by
// iterated averaging of the partial sums (Euler transformation).  panel(j)
// must return the j-th panel integral, already signed; the sequence is
// expected to alternate in sign with slowly varying magnitude, as happens
// for an oscillatory integrand cut at its zero crossings.  Converges to the
// Abel-summed value even when the raw series does not converge.  Throws
// accuracy_error if max_panels panels do not reach abs_tol.
QuadResult alternating_series(const std::function<double(int)>& panel,
                              double abs_tol, int max_panels = 96);

// Breakpoints {a, a+q/8, a+q/4, a+q/2, a+q, a+2q, ...} capped at b:
// geometric grading that resolves an integrand feature of width ~q at the
// left endpoint without wasting panels on the smooth remainder.
std::vector<double> graded_points(double a, double b, double q);

// Sorted deduplicated union of `base` and those of `extra` that fall
// strictly inside the span of `base` (whose endpoints define the interval).
std::vector<double> merge_points(std::vector<double> base,
                                 const std::vector<double>& extra);

}  // namespace skge::quad
