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

#include "disqla/observables.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include <fftw3.h>

#include "disqla/errors.hpp"

namespace disqla {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Applies the unitary DFT to every column of `a` in place.
void fourier_columns(Matrix& a, const std::vector<int>& extents) {
  const int rank = static_cast<int>(extents.size());
  const auto n = static_cast<int>(a.rows());
  const auto howmany = static_cast<int>(a.cols());
  auto* data = reinterpret_cast<fftw_complex*>(a.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_many_dft(rank, extents.data(), howmany, data, nullptr, 1, n, data, nullptr,
                              1, n, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  a /= std::sqrt(static_cast<double>(n));
}

}  // namespace

MatrixResult one_rdm(const SparseMatrix& h, double alpha, double beta, double mu, double eps) {
  const ChebyshevExpansion p = fermi_dirac_expansion(beta, mu, alpha, eps);
  const SparseMatrix scaled = h / alpha;
  MatrixResult r;
  r.value = clenshaw_apply_block(p, scaled, Matrix::Identity(h.rows(), h.cols()));
  r.error_bound = p.error_bound;
  r.degree = p.degree();
  return r;
}

double local_one_body_expectation(const Matrix& d, const SparseMatrix& o) {
  const SparseMatrix diff = o - SparseMatrix(o.adjoint());
  for (Eigen::Index r = 0; r < diff.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(diff, r); it; ++it) {
      if (std::abs(it.value()) > 1e-12) throw ContractViolation("observable must be Hermitian");
    }
  }
  Complex sum{};
  for (Eigen::Index r = 0; r < o.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(o, r); it; ++it) sum += it.value() * d(it.col(), it.row());
  }
  return sum.real();
}

MatrixResult retarded_greens(const SparseMatrix& h, double alpha_h, double omega, double eta,
                             double mu, double eps) {
  const double alpha = greens_alpha(alpha_h);
  const ChebyshevExpansion p = greens_expansion(omega + mu, eta, alpha, eps);
  const SparseMatrix scaled = h / alpha;
  MatrixResult r;
  r.value = clenshaw_apply_block(p, scaled, Matrix::Identity(h.rows(), h.cols()));
  r.error_bound = p.error_bound;
  r.degree = p.degree();
  return r;
}

MatrixResult spectral_function(const SparseMatrix& h, double alpha_h, double omega, double eta,
                               double mu, double eps) {
  const double alpha = greens_alpha(alpha_h);
  ChebyshevExpansion p = greens_expansion(omega + mu, eta, alpha, eps);
  // -Im p(H) = sum_k (-Im a_k) T_k(H) for Hermitian H
  for (Complex& a : p.coefficients) a = {-a.imag(), 0.0};
  const SparseMatrix scaled = h / alpha;
  MatrixResult r;
  r.value = clenshaw_apply_block(p, scaled, Matrix::Identity(h.rows(), h.cols()));
  r.error_bound = p.error_bound;
  r.degree = p.degree();
  return r;
}

double ldos_site(const SparseMatrix& h, double alpha_h, double omega, double eta, double mu,
                 double eps, std::uint64_t site) {
  if (site >= static_cast<std::uint64_t>(h.rows())) throw DomainError("site index out of range");
  const MatrixResult s = spectral_function(h, alpha_h, omega, eta, mu, eps);
  const auto i = static_cast<Eigen::Index>(site);
  return s.value(i, i).real() / (std::numbers::pi * eta);
}

Eigen::VectorXd momentum_diagonal(const Matrix& s, const std::vector<int>& extents) {
  long n = 1;
  for (int e : extents) n *= e;
  if (s.rows() != n || s.cols() != n) throw ContractViolation("extents do not match the matrix");
  Matrix b = s;
  fourier_columns(b, extents);  // F S
  Matrix c = b.adjoint();
  fourier_columns(c, extents);  // F (F S)^dagger = (F S F^dagger)^dagger
  return c.diagonal().conjugate().real();
}

Eigen::VectorXd ldos_momentum(const SparseMatrix& h, double alpha_h, double omega, double eta,
                              double mu, double eps, const std::vector<int>& extents) {
  const MatrixResult s = spectral_function(h, alpha_h, omega, eta, mu, eps);
  return momentum_diagonal(s.value, extents) / (std::numbers::pi * eta);
}

}  // namespace disqla
