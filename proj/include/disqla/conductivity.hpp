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

#ifndef DISQLA_CONDUCTIVITY_HPP
#define DISQLA_CONDUCTIVITY_HPP

#include <cstdint>

#include "disqla/chebyshev.hpp"

namespace disqla {

enum class TraceMode { exact, hutchinson };

struct ConductivityOptions {
  double beta = 10.0;
  double mu = 0.0;
  double eta = 0.1;
  /// Target for both the per-node polynomial error and the quadrature bound.
  double eps = 1e-4;
  /// Unit-cell volume V_at (e = hbar = 1).
  double cell_volume = 1.0;
  /// Lobatto degree; 0 picks the smallest one meeting eps.
  int nodes = 0;
  TraceMode trace = TraceMode::exact;
  int probes = 64;
  std::uint64_t key = 0;
};

struct ConductivityResult {
  Complex sigma{};
  /// Polynomial (Green's expansion) contribution to the error budget.
  double polynomial_budget = 0.0;
  /// Lobatto interpolation bound on the integration error.
  double quadrature_budget = 0.0;
  /// Standard error of the stochastic trace (0 for exact traces).
  double trace_standard_error = 0.0;
  int nodes = 0;
  int greens_degree = 0;
  double window_low = 0.0;
  double window_high = 0.0;

  double budget() const { return polynomial_budget + quadrature_budget + 3.0 * trace_standard_error; }
};

/// f_beta(omega - mu) Tr[v^x S v^y dG - h.c.] / N at energy omega, with
/// G = (omega + i eta - h)^{-1}, S = -Im(G) / pi, dG = -G^2, evaluated
/// from the Green's expansion of h / (2 alpha_h).
Complex kubo_integrand(const SparseMatrix& h, double alpha_h, const SparseMatrix& vx,
                       const SparseMatrix& vy, double omega, const ConductivityOptions& opt);

/// sigma^{xy} = i / (V_at N) int f_beta Tr[v^x S v^y dG/domega - h.c.] over
/// omega in [-alpha_h, alpha_h], the Green's window [-c, c] alpha_g.
ConductivityResult kubo_bastin_conductivity(const SparseMatrix& h, double alpha_h,
                                            const SparseMatrix& vx, const SparseMatrix& vy,
                                            const ConductivityOptions& opt);

/// Bound M on |integrand| over the ellipse whose imaginary reach is half
/// the distance to the nearest singularity, and the matching rho.
struct IntegrandEnvelope {
  double rho = 1.0;
  double bound = 0.0;
};
IntegrandEnvelope kubo_envelope(double vx_norm, double vy_norm, double eta, double beta,
                                double half_width);

}  // namespace disqla

#endif
