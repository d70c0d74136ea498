// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.

#include "skge/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "skge/errors.hpp"

namespace skge::quad {

namespace {

// Kronrod abscissae on [0, 1]; entries at odd index are the embedded
// Gauss-7 nodes.  Values from the QUADPACK DQK15 tables.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelEstimate {
  double value;
  double abs_error;
  double resabs;  // integral of |f|, for roundoff floor
};

PanelEstimate kronrod_panel(const std::function<double(double)>& f, double a,
                            double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double fv1[7];
  double fv2[7];
  const double fc = f(center);

  double result_gauss = kWg[3] * fc;
  double result_kronrod = kWgk[7] * fc;
  double resabs = kWgk[7] * std::abs(fc);

  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const double fsum = fv1[j] + fv2[j];
    if (j % 2 == 1) result_gauss += kWg[j / 2] * fsum;
    result_kronrod += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
  }

  const double mean = 0.5 * result_kronrod;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }

  result_gauss *= half;
  result_kronrod *= half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);

  double err = std::abs(result_kronrod - result_gauss);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double tiny = std::numeric_limits<double>::min();
  if (resabs > tiny / (50.0 * eps)) {
    err = std::max(err, 50.0 * eps * resabs);
  }
  return {result_kronrod, err, resabs};
}

struct Interval {
  double a, b, value, err, resabs;
  bool operator<(const Interval& o) const { return err < o.err; }
};

}  // namespace

QuadResult gauss_kronrod_15(const std::function<double(double)>& f, double a,
                            double b) {
  const PanelEstimate p = kronrod_panel(f, a, b);
  return {p.value, p.abs_error};
}

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol, int max_intervals) {
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw domain_error("integrate: endpoints must be finite");
  }
  if (!(abs_tol > 0.0)) {
    throw domain_error("integrate: abs_tol must be positive");
  }
  if (a == b) return {0.0, 0.0};

  std::priority_queue<Interval> heap;
  const double eps = std::numeric_limits<double>::epsilon();
  const PanelEstimate first = kronrod_panel(f, a, b);
  heap.push({a, b, first.value, first.abs_error, first.resabs});
  double total_value = first.value;
  double total_err = first.abs_error;
  double total_resabs = first.resabs;
  int used = 1;

  while (total_err > abs_tol && used < max_intervals) {
    // Every panel error is floored at 50 eps resabs, so once the total sits
    // near 50 eps of the total |f| mass no refinement can lower it: stop
    // instead of splitting panels whose estimates are pure roundoff.
    if (total_err <= 55.0 * eps * total_resabs) break;
    Interval worst = heap.top();
    if (worst.err <= 0.0) break;  // cannot improve further
    if (worst.err <= 52.0 * eps * worst.resabs) break;  // at roundoff floor
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval no longer splittable in double precision
      heap.push(worst);
      break;
    }
    const PanelEstimate left = kronrod_panel(f, worst.a, mid);
    const PanelEstimate right = kronrod_panel(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_err += left.abs_error + right.abs_error - worst.err;
    total_resabs += left.resabs + right.resabs - worst.resabs;
    heap.push({worst.a, mid, left.value, left.abs_error, left.resabs});
    heap.push({mid, worst.b, right.value, right.abs_error, right.resabs});
    ++used;
  }

  // Re-sum from the heap to shed cancellation in the running updates.
  total_value = 0.0;
  total_err = 0.0;
  while (!heap.empty()) {
    total_value += heap.top().value;
    total_err += heap.top().err;
    heap.pop();
  }

  if (total_err > abs_tol * (1.0 + 1e-12)) {
    throw accuracy_error(
        "integrate: adaptive subdivision exhausted before reaching tolerance",
        total_value, total_err);
  }
  return {total_value, total_err};
}

QuadResult integrate_segmented(const std::function<double(double)>& f,
                               const std::vector<double>& pts, double abs_tol,
                               int max_intervals) {
  if (pts.size() < 2) {
    throw shape_error("integrate_segmented: need at least two breakpoints");
  }
  double length = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i + 1] >= pts[i])) {
      throw domain_error("integrate_segmented: breakpoints must be ascending");
    }
    length += pts[i + 1] - pts[i];
  }
  if (length == 0.0) return {0.0, 0.0};

  QuadResult total{0.0, 0.0};
  double best = 0.0;
  bool failed = false;
  double achieved = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double seg = pts[i + 1] - pts[i];
    if (seg == 0.0) continue;
    // Floor the per-segment share so short lead-in segments are not starved.
    const double share =
        std::max(abs_tol * seg / length, abs_tol / (8.0 * double(pts.size())));
    try {
      const QuadResult q = integrate(f, pts[i], pts[i + 1], share,
                                     max_intervals);
      total.value += q.value;
      total.abs_error += q.abs_error;
      best += q.value;
      achieved += q.abs_error;
    } catch (const accuracy_error& e) {
      failed = true;
      best += e.best_estimate();
      achieved += e.achieved_error();
      total.value += e.best_estimate();
      total.abs_error += e.achieved_error();
    }
  }
  if (failed && total.abs_error > abs_tol) {
    throw accuracy_error(
        "integrate_segmented: tolerance not reached on all segments", best,
        achieved);
  }
  return total;
}

QuadResult alternating_series(const std::function<double(int)>& panel,
                              double abs_tol, int max_panels) {
  if (!(abs_tol > 0.0)) {
    throw domain_error("alternating_series: abs_tol must be positive");
  }
  // rows[k] holds the k-times-averaged sequence of partial sums; only the
  // most recent entry of each level is needed.
  std::vector<double> level;
  level.reserve(64);
  double partial = 0.0;
  double prev_top = std::numeric_limits<double>::quiet_NaN();
  double best = 0.0;
  double best_err = std::numeric_limits<double>::infinity();
  int stable = 0;

  for (int j = 0; j < max_panels; ++j) {
    partial += panel(j);
    double carry = partial;
    for (double& stored : level) {
      const double averaged = 0.5 * (stored + carry);
      stored = carry;
      carry = averaged;
    }
    level.push_back(carry);
    const double top = level.back();
    if (j > 0) {
      const double delta = std::abs(top - prev_top);
      if (delta < best_err) {
        best = top;
        best_err = delta;
      }
      stable = (delta <= 0.25 * abs_tol) ? stable + 1 : 0;
      if (stable >= 2) {
        return {top, std::max(delta, 0.25 * abs_tol)};
      }
    }
    prev_top = top;
  }
  throw accuracy_error(
      "alternating_series: averaging failed to reach tolerance", best,
      best_err);
}

std::vector<double> graded_points(double a, double b, double q) {
  std::vector<double> pts{a};
  double step = std::max(q, 1e-8) / 8.0;
  double t = a;
  while (t + step < b && pts.size() < 200) {
    t += step;
    pts.push_back(t);
    step *= 2.0;
  }
  if (b > a) pts.push_back(b);
  return pts;
}

std::vector<double> merge_points(std::vector<double> base,
                                 const std::vector<double>& extra) {
  if (base.empty()) return base;
  const double lo = base.front();
  const double hi = base.back();
  for (double p : extra) {
    if (p > lo && p < hi) base.push_back(p);
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end(),
                         [](double u, double v) {
                           return std::abs(u - v) <=
                                  1e-14 * (std::abs(u) + 1.0);
                         }),
             base.end());
  return base;
}

}  // namespace skge::quad
