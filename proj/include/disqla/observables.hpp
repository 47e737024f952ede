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

#ifndef DISQLA_OBSERVABLES_HPP
#define DISQLA_OBSERVABLES_HPP

#include <vector>

#include "disqla/chebyshev.hpp"

namespace disqla {

/// A matrix function value with the certified uniform error of the
/// polynomial that produced it (operator norm).
struct MatrixResult {
  Matrix value;
  double error_bound = 0.0;
  int degree = 0;
};

/// D = 1 / (exp(beta (h - mu)) + 1) through the Fermi-Dirac expansion of
/// h / alpha.
MatrixResult one_rdm(const SparseMatrix& h, double alpha, double beta, double mu, double eps);

/// sum_ij O_ij D_ji for a Hermitian O.
double local_one_body_expectation(const Matrix& d, const SparseMatrix& o);

/// Sub-normalization of the Green's expansion: alpha_g = 2 alpha_h, which
/// keeps (omega + mu) / alpha_g inside the window whenever |omega + mu| <= alpha_h.
inline double greens_alpha(double alpha_h) { return 2.0 * alpha_h; }

/// eta G^R(omega) with G^R = ((omega + i eta) - (h - mu))^{-1}.
MatrixResult retarded_greens(const SparseMatrix& h, double alpha_h, double omega, double eta,
                             double mu, double eps);

/// pi eta S(omega) = -Im(eta G^R), Im(A) = (A - A^dagger) / 2i.
MatrixResult spectral_function(const SparseMatrix& h, double alpha_h, double omega, double eta,
                               double mu, double eps);

/// S(omega)_ii.
double ldos_site(const SparseMatrix& h, double alpha_h, double omega, double eta, double mu,
                 double eps, std::uint64_t site);

/// Diagonal of F S F^dagger with F the unitary discrete Fourier transform
/// over the lattice axes (row-major sites, last axis fastest).
Eigen::VectorXd momentum_diagonal(const Matrix& s, const std::vector<int>& extents);

/// S~(omega)_kk for every momentum index k.
Eigen::VectorXd ldos_momentum(const SparseMatrix& h, double alpha_h, double omega, double eta,
                              double mu, double eps, const std::vector<int>& extents);

}  // namespace disqla

#endif
