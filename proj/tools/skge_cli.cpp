// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
//
// Command-line front end: kernel tabulation, Dirichlet solves, and the
// self-verification suites, with CSV/JSON output.
//
// Exit codes: 0 success, 2 usage or configuration error, 3 accuracy
// shortfall (output still written where the contract allows), 4 internal
// solver failure.
#include <cmath>
#include <cstddef>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "skge/boundary.hpp"
#include "skge/bvp_solver.hpp"
#include "skge/disk_validator.hpp"
#include "skge/errors.hpp"
#include "skge/fd_oracle.hpp"
#include "skge/field_grid.hpp"
#include "skge/general_elliptic.hpp"
#include "skge/halfplane_kernel.hpp"
#include "skge/quadrature.hpp"
#include "skge/report.hpp"
#include "skge/strip_kernel.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace skge;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitAccuracy = 3;
constexpr int kExitInternal = 4;
constexpr double kPi = 3.14159265358979323846;

struct GridOpts {
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
  std::size_t nx = 0, ny = 0;
  GridSpec spec() const { return {x_min, x_max, nx, y_min, y_max, ny}; }
};

void add_grid_options(CLI::App* cmd, GridOpts& g) {
  cmd->add_option("--x-min", g.x_min)->required();
  cmd->add_option("--x-max", g.x_max)->required();
  cmd->add_option("--nx", g.nx)->required();
  cmd->add_option("--y-min", g.y_min)->required();
  cmd->add_option("--y-max", g.y_max)->required();
  cmd->add_option("--ny", g.ny)->required();
}

Domain parse_domain(const std::string& s) {
  if (s == "strip") return Domain::strip;
  if (s == "halfplane") return Domain::halfplane;
  throw domain_error("unknown domain '" + s + "' (strip|halfplane)");
}

Representation parse_rep(const std::string& s) {
  if (s == "auto") return Representation::automatic;
  if (s == "series") return Representation::series;
  if (s == "integral") return Representation::integral;
  if (s == "closed") return Representation::closed_form;
  if (s == "j1") return Representation::via_j1;
  throw domain_error("unknown representation '" + s +
                     "' (auto|series|integral|closed|j1)");
}

// Named coefficient presets (r is supplied separately), or an explicit
// "sigma1,sigma2,rho,alpha1,alpha2,width" list.
elliptic::EllipticCoefficients parse_coeffs(const std::string& s, double r) {
  elliptic::EllipticCoefficients c;
  c.r = r;
  if (s == "canonical") return c;
  if (s == "anisotropy") {
    c.sigma2 = 2.0;
    return c;
  }
  if (s == "correlation") {
    c.sigma2 = 1.5;
    c.rho = 0.4;
    c.width_l = 2.5;
    return c;
  }
  if (s == "drift") {
    c.alpha1 = 0.5;
    return c;
  }
  if (s == "mixed") {
    c.sigma2 = 1.5;
    c.rho = 0.4;
    c.alpha1 = 0.3;
    c.alpha2 = -0.4;
    c.width_l = 2.5;
    return c;
  }
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double d;
    try {
      d = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw domain_error("coefficients: cannot parse '" + item + "'");
    }
    if (pos != item.size())
      throw domain_error("coefficients: cannot parse '" + item + "'");
    v.push_back(d);
  }
  if (v.size() != 6)
    throw domain_error(
        "coefficients: expected a preset name or 6 comma-separated values "
        "sigma1,sigma2,rho,alpha1,alpha2,width");
  c.sigma1 = v[0];
  c.sigma2 = v[1];
  c.rho = v[2];
  c.alpha1 = v[3];
  c.alpha2 = v[4];
  c.width_l = v[5];
  return c;
}

json field_to_json(const FieldGrid& g) {
  json out;
  out["nx"] = g.nx();
  out["ny"] = g.ny();
  out["xs"] = g.xs;
  out["ys"] = g.ys;
  out["values"] = g.values;
  out["err_estimates"] = g.err_estimates;
  out["partial"] = g.partial;
  return out;
}

void write_field_file(const FieldGrid& g, const std::string& path,
                      const std::string& format, const json& meta) {
  std::ofstream os(path);
  if (!os) throw domain_error("cannot open output file '" + path + "'");
  if (format == "csv") {
    write_csv(g, os);
  } else if (format == "json") {
    json out;
    out["metadata"] = meta;
    out["field"] = field_to_json(g);
    os << out.dump(2) << "\n";
  } else {
    throw domain_error("unknown format '" + format + "' (csv|json)");
  }
  if (!os.good()) throw solver_error("write to '" + path + "' failed");
}

// ---------------------------------------------------------------- kernel --

struct KernelOpts {
  std::string domain = "strip";
  std::string rep = "auto";
  double r = 1.0;
  double tol = 1e-9;
  std::string coeffs;
  GridOpts grid;
  std::string out;
  std::string format = "csv";
};

int run_kernel(const KernelOpts& o) {
  const Domain dom = parse_domain(o.domain);
  const Representation rep = parse_rep(o.rep);
  if (o.r < 0.0) throw domain_error("r must be non-negative");
  if (!(o.tol > 0.0)) throw domain_error("tol must be positive");
  std::optional<elliptic::EllipticCoefficients> gen;
  if (!o.coeffs.empty()) {
    if (rep != Representation::automatic)
      throw domain_error(
          "general coefficients use their own reduction; --rep must be auto");
    gen = parse_coeffs(o.coeffs, o.r);
    (void)elliptic::derive_change_of_variables(*gen);
  }
  if (dom == Domain::strip && rep == Representation::closed_form &&
      o.r != 0.0)
    throw domain_error("the strip closed form exists only for r = 0");
  if (dom == Domain::halfplane &&
      (rep == Representation::series || rep == Representation::via_j1))
    throw domain_error(
        "the half-plane kernel has closed-form and integral "
        "representations only");

  FieldGrid g = make_grid(o.grid.spec());
  auto eval_plain = [&](double x, double y) {
    if (dom == Domain::strip) {
      strip::StripKernelPoint p{x, y, o.r};
      switch (rep) {
        case Representation::automatic:
          return strip::green_strip(p, o.tol);
        case Representation::series:
          return strip::green_strip_series(p, o.tol);
        case Representation::integral:
          return strip::green_strip_integral(p, o.tol);
        case Representation::via_j1:
          return strip::green_strip_via_j1(p, o.tol);
        case Representation::closed_form:
          return strip::green_strip_laplace(x, y);
      }
      throw domain_error("unreachable representation");
    }
    halfplane::HalfplaneKernelPoint p{x, y, o.r};
    if (rep == Representation::integral)
      return halfplane::green_halfplane_integral(p, o.tol);
    return halfplane::green_halfplane_closed(p);
  };

  bool partial = false;
  for (std::size_t iy = 0; iy < g.ny(); ++iy) {
    for (std::size_t ix = 0; ix < g.nx(); ++ix) {
      double x = g.xs[ix], y = g.ys[iy];
      double v, err = o.tol;
      try {
        v = gen ? (dom == Domain::strip
                       ? elliptic::green_strip_general(x, y, *gen, o.tol)
                       : elliptic::green_halfplane_general(x, y, *gen, o.tol))
                : eval_plain(x, y);
      } catch (const singularity_error&) {
        std::cerr << "warning: kernel singular at (" << x << ", " << y
                  << "); cell set to nan\n";
        v = std::numeric_limits<double>::quiet_NaN();
        err = 0.0;
      } catch (const series_divergence_error&) {
        std::cerr << "warning: series representation unavailable at (" << x
                  << ", " << y << "); cell set to nan\n";
        v = std::numeric_limits<double>::quiet_NaN();
        err = 0.0;
      } catch (const accuracy_error& e) {
        v = e.best_estimate();
        err = e.achieved_error();
        partial = true;
      }
      g.values[iy * g.nx() + ix] = v;
      g.err_estimates[iy * g.nx() + ix] = err;
    }
  }
  g.partial = partial;

  json meta;
  meta["command"] = "kernel";
  meta["domain"] = o.domain;
  meta["representation"] = o.rep;
  meta["r"] = o.r;
  if (!o.coeffs.empty()) meta["coefficients"] = o.coeffs;
  meta["tol"] = o.tol;
  write_field_file(g, o.out, o.format, meta);
  return partial ? kExitAccuracy : kExitOk;
}

// ----------------------------------------------------------------- solve --

struct SolveOpts {
  std::string domain = "strip";
  double r = 1.0;
  double tol = 1e-7;
  std::string boundary;
  std::string top;
  std::string coeffs;
  GridOpts grid;
  int threads = 1;
  std::string out;
  std::string format = "csv";
};

int run_solve(const SolveOpts& o) {
  const Domain dom = parse_domain(o.domain);
  if (o.r < 0.0) throw domain_error("r must be non-negative");
  if (!(o.tol > 0.0)) throw domain_error("tol must be positive");
  if (o.threads < 1) throw domain_error("threads must be >= 1");
  BoundaryFunction phi = make_boundary(o.boundary);
  if (!o.top.empty() && dom != Domain::strip)
    throw domain_error("--top applies to the strip only");
  if (!o.top.empty() && !o.coeffs.empty())
    throw domain_error(
        "the general strip solve takes data on y = 0 only (zero top)");

  FieldGrid g;
  if (!o.coeffs.empty()) {
    elliptic::EllipticCoefficients c = parse_coeffs(o.coeffs, o.r);
    g = dom == Domain::strip
            ? solve_strip_general(phi, o.grid.spec(), c, o.tol, o.threads)
            : solve_halfplane_general(phi, o.grid.spec(), c, o.tol,
                                      o.threads);
  } else if (dom == Domain::strip) {
    BoundaryFunction top =
        o.top.empty() ? boundary_constant(0.0) : make_boundary(o.top);
    g = solve_strip(phi, top, o.grid.spec(), o.r, o.tol, o.threads);
  } else {
    g = solve_halfplane(phi, o.grid.spec(), o.r, o.tol, o.threads);
  }

  json meta;
  meta["command"] = "solve";
  meta["domain"] = o.domain;
  meta["r"] = o.r;
  meta["boundary"] = o.boundary;
  if (!o.top.empty()) meta["top"] = o.top;
  if (!o.coeffs.empty()) meta["coefficients"] = o.coeffs;
  meta["tol"] = o.tol;
  write_field_file(g, o.out, o.format, meta);
  if (g.partial)
    std::cerr << "warning: some points missed the accuracy target; "
                 "best estimates written with their achieved errors\n";
  return g.partial ? kExitAccuracy : kExitOk;
}

// ---------------------------------------------------------------- verify --

json report_to_json(const OracleReport& r) {
  json out;
  out["description"] = r.description;
  out["tolerance"] = r.tolerance;
  out["n_points"] = r.n_points;
  out["max_abs_dev"] = r.max_abs_dev;
  out["mean_abs_dev"] = r.mean_abs_dev;
  out["pass"] = r.pass;
  return out;
}

json suite_reps(std::optional<double> r_opt) {
  json suite;
  suite["name"] = "reps";
  json cases = json::array();
  bool all_pass = true;
  const double xs[] = {0.25, 0.5, 1.0, 2.0, 4.0};
  const double ys[] = {0.3, 1.0, kPi / 2.0, 2.0, 2.8};
  std::vector<double> rs =
      r_opt ? std::vector<double>{*r_opt} : std::vector<double>{0.5, 1.0, 3.0};
  for (double r : rs) {
    OracleReport rep;
    rep.tolerance = (r == 0.0) ? 1e-9 : 1e-7;
    rep.description = (r == 0.0)
                          ? "series vs closed form at r = 0"
                          : "series vs integral vs J1 route, r = " +
                                std::to_string(r);
    for (double ax : xs)
      for (double y : ys)
        for (double sgn : {1.0, -1.0}) {
          double x = sgn * ax;
          strip::StripKernelPoint p{x, y, r};
          if (r == 0.0) {
            double closed = strip::green_strip_laplace(x, y);
            rep.add(strip::green_strip_series(p, 1e-12), closed);
            rep.add(strip::green_strip_integral(p, 1e-12), closed);
          } else {
            double series = strip::green_strip_series(p, 1e-9);
            double integral = strip::green_strip_integral(p, 1e-9);
            double j1 = strip::green_strip_via_j1(p, 1e-9);
            rep.add(series, integral);
            rep.add(series, j1);
            rep.add(integral, j1);
          }
        }
    rep.finalize();
    all_pass = all_pass && rep.pass;
    cases.push_back(report_to_json(rep));
  }
  suite["cases"] = cases;
  suite["pass"] = all_pass;
  return suite;
}

json suite_mass() {
  json suite;
  suite["name"] = "mass";
  OracleReport rep;
  rep.description = "kernel x-integral against the closed mass profiles";
  rep.tolerance = 1e-7;
  for (double r : {0.5, 1.0, 3.0}) {
    for (double y : {0.5, kPi / 2.0, 2.5}) {
      auto f = [&](double x) { return strip::green_strip({x, y, r}, 1e-11); };
      auto pts = quad::graded_points(0.0, 2.0, std::min(y, kPi - y));
      double numeric = 2.0 * (quad::integrate_segmented(f, pts, 1e-9).value +
                              strip::strip_tail_mass(2.0, y, r, 1e-10));
      rep.add(numeric, strip::strip_mass(y, r));
    }
    for (double y : {0.5, 1.0, 2.0}) {
      auto f = [&](double x) {
        return halfplane::green_halfplane_closed({x, y, r});
      };
      auto pts = quad::graded_points(0.0, 2.0, std::min(y, 1.0));
      double numeric =
          2.0 * (quad::integrate_segmented(f, pts, 1e-9).value +
                 halfplane::halfplane_tail_mass(2.0, y, r, 1e-10));
      rep.add(numeric, halfplane::halfplane_mass(y, r));
    }
  }
  rep.finalize();
  json suite_cases = json::array();
  suite_cases.push_back(report_to_json(rep));
  suite["cases"] = suite_cases;
  suite["pass"] = rep.pass;
  return suite;
}

json suite_g3914() {
  json suite;
  suite["name"] = "g3914";
  json cases = json::array();
  bool all_pass = true;
  const double triples[6][3] = {{1.0, 1.0, 1.0},  {2.0, 0.5, 1.5},
                                {0.7, 2.0, 1.0},  {3.0, 1.0, 0.5},
                                {1.5, 1.5, 2.0},  {0.5, 3.0, 1.2}};
  for (const auto& t : triples) {
    OracleReport rep =
        halfplane::identity_gradshteyn_3914(t[0], t[1], t[2], 1e-8);
    all_pass = all_pass && rep.pass;
    json c = report_to_json(rep);
    c["a"] = t[0];
    c["beta"] = t[1];
    c["gamma"] = t[2];
    cases.push_back(c);
  }
  suite["cases"] = cases;
  suite["pass"] = all_pass;
  return suite;
}

json suite_meanvalue() {
  json suite;
  suite["name"] = "meanvalue";
  json cases = json::array();
  bool all_pass = true;

  struct Circle {
    double cx, cy, radius;
  };
  auto run_field = [&](const std::string& label,
                       const std::function<double(double, double)>& field,
                       double r, const std::vector<Circle>& circles) {
    OracleReport rep;
    rep.description = label;
    rep.tolerance = 1e-6;
    for (const Circle& c : circles) {
      disk::MeanValueReport mv = disk::mean_value_check(
          field, c.cx, c.cy, c.radius, r, rep.tolerance, 128);
      rep.add(mv.circle_average, mv.predicted);
    }
    rep.finalize();
    all_pass = all_pass && rep.pass;
    cases.push_back(report_to_json(rep));
  };

  KernelSpec strip_ks{Domain::strip, Representation::automatic, 1.0};
  auto phi_s = boundary_gaussian(0.0, 0.6);
  run_field(
      "strip field, r = 1, gaussian data",
      [&](double x, double y) {
        return convolve_kernel(strip_ks, phi_s, x, y, 1e-8);
      },
      1.0, {{0.0, 1.2, 0.3}, {0.5, 1.8, 0.1}});

  KernelSpec half_ks{Domain::halfplane, Representation::automatic, 2.0};
  auto phi_h = boundary_gaussian(0.5, 0.8);
  run_field(
      "half-plane field, r = 2, gaussian data",
      [&](double x, double y) {
        return convolve_kernel(half_ks, phi_h, x, y, 1e-8);
      },
      2.0, {{0.0, 1.0, 0.3}, {1.0, 1.5, 0.1}});

  suite["cases"] = cases;
  suite["pass"] = all_pass;
  return suite;
}

json suite_fdoracle(const std::string& coeffs_name) {
  json suite;
  suite["name"] = "fdoracle";
  elliptic::EllipticCoefficients c =
      parse_coeffs(coeffs_name.empty() ? "canonical" : coeffs_name, 1.0);
  auto phi = boundary_gaussian(0.0, 0.6);
  std::size_t ny_cells =
      static_cast<std::size_t>(std::lround(32.0 * c.width_l));
  fd::FdProblem p = fd::make_strip_fd_problem(c, phi, 6.0, ny_cells);
  FieldGrid g = fd::assemble_and_solve(p, 1e-9);

  OracleReport rep;
  rep.description = "finite differences vs analytic solve, coefficients '" +
                    (coeffs_name.empty() ? std::string("canonical")
                                         : coeffs_name) +
                    "'";
  rep.tolerance = 5e-3;
  const std::size_t mid = (g.nx() - 1) / 2;
  const std::size_t di = static_cast<std::size_t>(std::lround(1.0 / p.h));
  for (std::size_t ix :
       {mid - 2 * di, mid - di, mid, mid + di, mid + 2 * di})
    for (std::size_t iy : {g.ny() / 4, g.ny() / 2, (3 * g.ny()) / 4})
      rep.add(g.at(ix, iy), convolve_general(c, Domain::strip, phi, g.xs[ix],
                                             g.ys[iy], 1e-6));
  rep.finalize();

  json jc = report_to_json(rep);
  jc["grid"] = {{"h", p.h}, {"nx", p.nx}, {"ny", p.ny}};
  json cases = json::array();
  cases.push_back(jc);
  suite["cases"] = cases;
  suite["pass"] = rep.pass;
  return suite;
}

struct VerifyOpts {
  std::string suite;
  std::optional<double> r;
  std::string coeffs;
  std::string out;
};

int run_verify(const VerifyOpts& o) {
  json suites = json::array();
  if (o.suite == "reps" || o.suite == "all") suites.push_back(suite_reps(o.r));
  if (o.suite == "mass" || o.suite == "all") suites.push_back(suite_mass());
  if (o.suite == "g3914" || o.suite == "all") suites.push_back(suite_g3914());
  if (o.suite == "meanvalue" || o.suite == "all")
    suites.push_back(suite_meanvalue());
  if (o.suite == "fdoracle" || o.suite == "all")
    suites.push_back(suite_fdoracle(o.coeffs));
  if (suites.empty())
    throw domain_error("unknown suite '" + o.suite +
                       "' (reps|mass|g3914|meanvalue|fdoracle|all)");
  bool all_pass = true;
  for (const auto& s : suites) all_pass = all_pass && s["pass"].get<bool>();
  json report;
  report["suites"] = suites;
  report["pass"] = all_pass;
  std::string text = report.dump(2);
  std::cout << text << "\n";
  if (!o.out.empty()) {
    std::ofstream os(o.out);
    if (!os) throw domain_error("cannot open output file '" + o.out + "'");
    os << text << "\n";
  }
  return all_pass ? kExitOk : kExitAccuracy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Green-function kernels and Dirichlet solvers for the static "
      "two-dimensional Klein-Gordon operator on a strip and half-plane"};
  app.require_subcommand(1);

  KernelOpts ko;
  CLI::App* kernel = app.add_subcommand(
      "kernel", "Tabulate a Green-function kernel on a grid");
  kernel->add_option("--domain", ko.domain, "strip|halfplane");
  kernel->add_option("--rep", ko.rep, "auto|series|integral|closed|j1");
  kernel->add_option("--r", ko.r, "mass parameter");
  kernel->add_option("--tol", ko.tol, "evaluation tolerance");
  kernel->add_option("--coeffs", ko.coeffs,
                     "general coefficients: preset name or "
                     "sigma1,sigma2,rho,alpha1,alpha2,width");
  add_grid_options(kernel, ko.grid);
  kernel->add_option("--out", ko.out, "output path")->required();
  kernel->add_option("--format", ko.format, "csv|json");

  SolveOpts so;
  CLI::App* solve = app.add_subcommand(
      "solve", "Solve a Dirichlet problem by boundary convolution");
  solve->add_option("--domain", so.domain, "strip|halfplane");
  solve->add_option("--r", so.r, "mass parameter");
  solve->add_option("--tol", so.tol, "per-point accuracy target");
  solve->add_option("--boundary", so.boundary,
                    "data on y = 0, e.g. gaussian(0,0.6)")
      ->required();
  solve->add_option("--top", so.top, "strip data on the upper edge");
  solve->add_option("--coeffs", so.coeffs,
                    "general coefficients: preset name or "
                    "sigma1,sigma2,rho,alpha1,alpha2,width");
  add_grid_options(solve, so.grid);
  solve->add_option("--threads", so.threads, "worker threads (default 1)");
  solve->add_option("--out", so.out, "output path")->required();
  solve->add_option("--format", so.format, "csv|json");

  VerifyOpts vo;
  double vr = 0.0;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a self-verification suite and emit a JSON report");
  verify->add_option("--suite", vo.suite,
                     "reps|mass|g3914|meanvalue|fdoracle|all")
      ->required();
  CLI::Option* vropt =
      verify->add_option("--r", vr, "restrict the reps suite to one r");
  verify->add_option("--coeffs", vo.coeffs,
                     "coefficient preset for the fdoracle suite");
  verify->add_option("--out", vo.out, "also write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*kernel) return run_kernel(ko);
    if (*solve) return run_solve(so);
    if (*vropt) vo.r = vr;
    return run_verify(vo);
  } catch (const solver_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const accuracy_error& e) {
    std::cerr << "error: " << e.what()
              << " (best estimate " << e.best_estimate() << ", achieved "
              << e.achieved_error() << ")\n";
    return kExitAccuracy;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
