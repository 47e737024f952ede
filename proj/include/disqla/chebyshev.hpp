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

#ifndef DISQLA_CHEBYSHEV_HPP
#define DISQLA_CHEBYSHEV_HPP

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace disqla {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

/// f(x) ~ sum_k a_k T_k(x) on [-1, 1], with
/// a_k = (2 - delta_k0) / pi * int f T_k / sqrt(1 - x^2).
struct ChebyshevExpansion {
  std::string tag = "custom";
  std::map<std::string, double> parameters;
  std::vector<Complex> coefficients;
  /// Bernstein ellipse parameter and the bound on |f| inside it.
  double rho = 1.0;
  double ellipse_max = 0.0;
  /// Certified uniform error on [-1, 1].
  double error_bound = 0.0;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Complex operator()(double x) const;
  Complex operator()(Complex z) const;
  bool is_real(double tol = 0.0) const;
  /// Same expansion with every coefficient conjugated.
  ChebyshevExpansion conjugated() const;
};

/// 2 M rho^{-d} / (rho - 1).
double ellipse_bound(double rho, double m, int degree);

/// Coefficients of f by Gauss-Chebyshev (discrete cosine) quadrature on
/// `nodes` points.
std::vector<Complex> chebyshev_coefficients(const std::function<Complex(double)>& f,
                                            int degree, int nodes);

/// max |f(z)| on the boundary of the Bernstein ellipse E_rho.
double ellipse_maximum(const std::function<Complex(Complex)>& f, double rho,
                       int samples = 512);

/// max |f(x) - p(x)| over `points` equispaced points of [-1, 1].
double measured_uniform_error(const ChebyshevExpansion& p,
                              const std::function<Complex(double)>& f, int points = 10000);

/// ceil((alpha beta + 1) ln(2.2 alpha beta / eps)), floored at 16.
int fermi_dirac_degree(double alpha_beta, double eps);

/// x -> 1 / (exp(beta (alpha x - mu)) + 1).
ChebyshevExpansion fermi_dirac_expansion(double beta, double mu, double alpha, double eps);

/// Largest |Re z| admitted by the Green's expansion after rescaling.
inline constexpr double kGreensWindow = 0.5;

/// x -> eta' / (z - x), z = (omega + i eta) / alpha, eta' = eta / alpha,
/// with the analytic coefficients a_k = (2 - delta_k0) eta' / (r w^k),
/// r = sqrt(z^2 - 1), w = z + r, |w| > 1.  The degree is the smallest one
/// whose exact coefficient tail is below eps.
ChebyshevExpansion greens_expansion(double omega, double eta, double alpha, double eps,
                                    double window = kGreensWindow);

/// Analytic a_k of eta' / (z - x) for complex z off [-1, 1].
Complex greens_coefficient(Complex z, double eta_scaled, int k);

/// ceil(ln(2 / (|r| eps)) / ln(1 + eta')), the reference degree of the
/// worst-case envelope eta' (1 + eta')^{-k}.
int greens_reference_degree(double omega, double eta, double alpha, double eps);

/// Largest singular value estimate by power iteration on A^dagger A.
double estimate_norm(const SparseMatrix& a, int iterations = 60);
double estimate_norm(const Matrix& a, int iterations = 60);

/// p(H) by the Clenshaw recurrence.  Throws ScalingError when ||H|| is
/// estimated above 1 + 1e-8.
Matrix clenshaw_apply(const ChebyshevExpansion& p, const Matrix& h_scaled);
/// p(H) X using sparse products only.
Matrix clenshaw_apply_block(const ChebyshevExpansion& p, const SparseMatrix& h_scaled,
                           const Matrix& block);
Vector clenshaw_apply(const ChebyshevExpansion& p, const SparseMatrix& h_scaled,
                      const Vector& v);

}  // namespace disqla

#endif
