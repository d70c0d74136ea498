// This file is part of skge, Green-function solvers for the static
// two-dimensional Klein-Gordon equation on a strip and half-plane.
// Distributed under the MIT License; see LICENSE.
#include "skge/boundary.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "skge/errors.hpp"

namespace skge {

BoundaryFunction boundary_constant(double c) {
  if (!std::isfinite(c)) throw domain_error("boundary constant: non-finite");
  BoundaryFunction b;
  b.eval = [c](double) { return c; };
  b.holder_lambda = 1.0;
  b.holder_c = 0.0;
  b.sup_bound = std::fabs(c);
  b.left_constant = c;
  b.right_constant = c;
  b.compact_radius = 0.0;
  return b;
}

BoundaryFunction boundary_step() {
  BoundaryFunction b;
  b.eval = [](double u) { return u > 0.0 ? 1.0 : (u < 0.0 ? 0.0 : 0.5); };
  b.holder_lambda = 1.0;  // nominal; the jump itself is exempt
  b.holder_c = 1.0;
  b.sup_bound = 1.0;
  b.left_constant = 0.0;
  b.right_constant = 1.0;
  b.compact_radius = 0.0;
  b.breakpoints = {0.0};
  return b;
}

BoundaryFunction boundary_exp_step(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw domain_error("boundary exp_step: eps must be positive");
  BoundaryFunction b;
  b.eval = [eps](double u) { return u >= 0.0 ? std::exp(-eps * u) : 0.0; };
  b.holder_lambda = 1.0;
  b.holder_c = std::max(1.0, eps);
  b.sup_bound = 1.0;
  b.left_constant = 0.0;
  b.right_constant = 0.0;
  // e^{-eps u} < 1e-12 beyond this radius, so the clamp is inconsequential.
  b.compact_radius = 27.7 / eps;
  b.breakpoints = {0.0};
  return b;
}

BoundaryFunction boundary_gaussian(double mu, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(mu))
    throw domain_error("boundary gaussian: sigma must be positive");
  BoundaryFunction b;
  b.eval = [mu, sigma](double u) {
    double t = (u - mu) / sigma;
    return std::exp(-0.5 * t * t);
  };
  b.holder_lambda = 1.0;
  b.holder_c = std::exp(-0.5) / sigma;  // max slope of the profile
  b.sup_bound = 1.0;
  b.left_constant = 0.0;
  b.right_constant = 0.0;
  // Value below 6e-13 outside; clamping keeps the tail declaration exact.
  b.compact_radius = std::fabs(mu) + 7.5 * sigma;
  return b;
}

BoundaryFunction boundary_cosine(double a) {
  if (!std::isfinite(a)) throw domain_error("boundary cosine: non-finite");
  BoundaryFunction b;
  b.eval = [a](double u) { return std::cos(a * u); };
  b.holder_lambda = 1.0;
  b.holder_c = std::fabs(a);
  b.sup_bound = 1.0;
  return b;  // no constant tails
}

BoundaryFunction boundary_holder_cusp(double lambda) {
  if (!(lambda > 0.0) || lambda > 1.0 || !std::isfinite(lambda))
    throw domain_error("boundary holder_cusp: lambda must be in (0, 1]");
  BoundaryFunction b;
  b.eval = [lambda](double u) {
    double a = std::fabs(u);
    return a >= 1.0 ? 0.0 : 1.0 - std::pow(a, lambda);
  };
  b.holder_lambda = lambda;
  b.holder_c = 1.0;  // | |u|^l - |v|^l | <= |u - v|^l
  b.sup_bound = 1.0;
  b.left_constant = 0.0;
  b.right_constant = 0.0;
  b.compact_radius = 1.0;
  b.breakpoints = {-1.0, 0.0, 1.0};
  return b;
}

namespace {

std::vector<double> parse_args(const std::string& inside,
                               const std::string& spec) {
  std::vector<double> args;
  std::size_t pos = 0;
  while (pos < inside.size()) {
    std::size_t comma = inside.find(',', pos);
    std::string tok = inside.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const char* cstr = tok.c_str();
    char* end = nullptr;
    double v = std::strtod(cstr, &end);
    while (end && *end != '\0' && std::isspace(static_cast<unsigned char>(*end)))
      ++end;
    if (end == cstr || (end && *end != '\0'))
      throw domain_error("boundary spec: bad numeric argument in '" + spec +
                         "'");
    args.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return args;
}

}  // namespace

BoundaryFunction make_boundary(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::string name = s;
  std::vector<double> args;
  std::size_t open = s.find('(');
  if (open != std::string::npos) {
    if (s.back() != ')')
      throw domain_error("boundary spec: missing ')' in '" + spec + "'");
    name = s.substr(0, open);
    args = parse_args(s.substr(open + 1, s.size() - open - 2), spec);
  }
  auto want = [&](std::size_t n) {
    if (args.size() != n)
      throw domain_error("boundary spec: '" + name + "' takes " +
                         std::to_string(n) + " argument(s)");
  };
  if (name == "constant") {
    want(1);
    return boundary_constant(args[0]);
  }
  if (name == "step") {
    want(0);
    return boundary_step();
  }
  if (name == "exp_step") {
    want(1);
    return boundary_exp_step(args[0]);
  }
  if (name == "gaussian") {
    want(2);
    return boundary_gaussian(args[0], args[1]);
  }
  if (name == "cosine") {
    want(1);
    return boundary_cosine(args[0]);
  }
  if (name == "holder_cusp") {
    want(1);
    return boundary_holder_cusp(args[0]);
  }
  throw domain_error("boundary spec: unknown profile '" + name + "'");
}

}  // namespace skge
