// Copyright 2026 The disqla Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "disqla/conductivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "disqla/errors.hpp"
#include "disqla/estimation.hpp"
#include "disqla/observables.hpp"
#include "disqla/quadrature.hpp"

namespace disqla {

namespace {

double fermi(double x, double beta) {
  const double u = beta * x;
  return u > 0.0 ? std::exp(-u) / (1.0 + std::exp(-u)) : 1.0 / (std::exp(u) + 1.0);
}

struct NodeValue {
  Complex value{};
  double variance = 0.0;
  int degree = 0;
  double greens_error = 0.0;
};

NodeValue evaluate_node(const SparseMatrix& h, double alpha_h, const Matrix& vx,
                        const Matrix& vy, double omega, const ConductivityOptions& opt) {
  const MatrixResult eg = retarded_greens(h, alpha_h, omega, opt.eta, 0.0, opt.eps * opt.eta);
  const Matrix g = eg.value / opt.eta;
  const Matrix s = -(g - g.adjoint()) / (Complex{0.0, 2.0} * std::numbers::pi);
  const Matrix a = vx * s * vy * (-(g * g));
  const Matrix integrand = a - a.adjoint();
  const double f = fermi(omega - opt.mu, opt.beta);
  const auto n = static_cast<double>(h.rows());
  NodeValue out;
  out.degree = eg.degree;
  out.greens_error = eg.error_bound / opt.eta;
  if (opt.trace == TraceMode::exact) {
    out.value = f * integrand.trace() / n;
    return out;
  }
  const std::uint64_t key = opt.key ^ std::hash<double>{}(omega);
  const EstimateRecord r = hutchinson_trace_estimate(
      [&](const Vector& z) -> Vector { return integrand * z; },
      static_cast<std::uint64_t>(h.rows()), opt.probes, key);
  out.value = f * r.value;
  out.variance = f * f * r.standard_error * r.standard_error;
  return out;
}

}  // namespace

IntegrandEnvelope kubo_envelope(double vx_norm, double vy_norm, double eta, double beta,
                                double half_width) {
  const double reach = beta > 0.0 ? std::min(eta, std::numbers::pi / beta) : eta;
  const double b = 0.5 * reach / half_width;
  IntegrandEnvelope e;
  e.rho = b + std::sqrt(b * b + 1.0);
  // Inside the ellipse every pole of G, G^dagger stays eta/2 away and
  // |f_beta| <= 1: ||S|| <= 4 / (pi eta) (kept loose), ||G^2|| <= (2 / eta)^2,
  // and the h.c. term doubles the total.
  e.bound = 2.0 * vx_norm * vy_norm * (4.0 / (std::numbers::pi * eta)) * std::pow(2.0 / eta, 2);
  return e;
}

Complex kubo_integrand(const SparseMatrix& h, double alpha_h, const SparseMatrix& vx,
                       const SparseMatrix& vy, double omega, const ConductivityOptions& opt) {
  return evaluate_node(h, alpha_h, Matrix(vx), Matrix(vy), omega, opt).value;
}

ConductivityResult kubo_bastin_conductivity(const SparseMatrix& h, double alpha_h,
                                            const SparseMatrix& vx, const SparseMatrix& vy,
                                            const ConductivityOptions& opt) {
  if (h.rows() != vx.rows() || h.rows() != vy.rows() || h.rows() != h.cols()) {
    throw ContractViolation("h, v^x and v^y must share one dimension");
  }
  if (!(opt.eta > 0.0)) throw DomainError("broadening eta must be positive");
  if (!(opt.cell_volume > 0.0)) throw DomainError("cell volume must be positive");
  ConductivityResult out;
  out.window_low = -alpha_h;
  out.window_high = alpha_h;
  const double half = alpha_h;
  const Matrix dvx(vx);
  const Matrix dvy(vy);
  const double nx = estimate_norm(vx, 200);
  const double ny = estimate_norm(vy, 200);
  const IntegrandEnvelope env = kubo_envelope(nx, ny, opt.eta, opt.beta, half);

  const int greens_degree =
      greens_expansion(0.0, opt.eta, greens_alpha(alpha_h), opt.eps * opt.eta).degree();
  int nodes = opt.nodes;
  auto quad_bound = [&](int d) {
    return 2.0 * half * lobatto_interpolation_bound(env.rho, env.bound, d) / opt.cell_volume;
  };
  if (nodes == 0) {
    nodes = std::max(2, greens_degree / 2);
    while (quad_bound(nodes) > opt.eps) nodes = static_cast<int>(std::ceil(nodes * 1.25));
  } else if (nodes < greens_degree / 2) {
    throw DomainError("Lobatto grid of " + std::to_string(nodes) +
                      " nodes is too coarse for Green's degree " +
                      std::to_string(greens_degree) + "; use at least " +
                      std::to_string(greens_degree / 2));
  }
  const QuadratureGrid grid = lobatto_grid_weights(nodes);
  Complex integral{};
  double variance = 0.0;
  double worst_g = 0.0;
  for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
    const double omega = half * grid.nodes[j];
    const NodeValue v = evaluate_node(h, alpha_h, dvx, dvy, omega, opt);
    integral += half * grid.weights[j] * v.value;
    variance += std::pow(half * grid.weights[j], 2) * v.variance;
    worst_g = std::max(worst_g, v.greens_error);
  }
  const Complex prefactor = Complex{0.0, 1.0} / opt.cell_volume;
  out.sigma = prefactor * integral;

  // Perturbing G by dG (||dG|| <= worst_g) moves S by at most dG / pi and
  // Tr[...]/N by ||vx|| ||vy|| (dS ||G||^2 + ||S|| (2 ||G|| + dG) dG); the
  // h.c. term doubles it and int |f| <= 2 half.
  const double gn = 1.0 / opt.eta;
  const double sn = 1.0 / (std::numbers::pi * opt.eta);
  const double per_node =
      2.0 * nx * ny * (worst_g / std::numbers::pi * gn * gn + sn * (2.0 * gn + worst_g) * worst_g);
  out.polynomial_budget = 2.0 * half * per_node / opt.cell_volume;
  out.quadrature_budget = quad_bound(nodes);
  out.trace_standard_error = std::sqrt(variance) / opt.cell_volume;
  out.nodes = nodes;
  out.greens_degree = greens_degree;
  return out;
}

}  // namespace disqla
