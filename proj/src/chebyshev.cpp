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

#include "disqla/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "disqla/errors.hpp"

namespace disqla {

namespace {

constexpr int kMaxDegree = 1 << 20;

Complex fermi_dirac(Complex u) {
  // 1 / (e^u + 1) without overflow on either side
  if (u.real() > 0.0) {
    const Complex e = std::exp(-u);
    return e / (1.0 + e);
  }
  return 1.0 / (std::exp(u) + 1.0);
}

template <class M>
M clenshaw_loop(const ChebyshevExpansion& p, const std::function<M(const M&)>& apply,
                const M& seed) {
  const int d = p.degree();
  if (d < 0) return M::Zero(seed.rows(), seed.cols());
  M b1 = M::Zero(seed.rows(), seed.cols());
  M b2 = M::Zero(seed.rows(), seed.cols());
  for (int k = d; k >= 1; --k) {
    M b0 = p.coefficients[static_cast<std::size_t>(k)] * seed + 2.0 * apply(b1) - b2;
    b2 = std::move(b1);
    b1 = std::move(b0);
  }
  return p.coefficients[0] * seed + apply(b1) - b2;
}

void check_scaling(double norm) {
  if (norm > 1.0 + 1e-8) {
    throw ScalingError("matrix norm estimate " + std::to_string(norm) +
                       " exceeds 1; the sub-normalization is too small");
  }
}

}  // namespace

Complex ChebyshevExpansion::operator()(double x) const { return (*this)(Complex{x, 0.0}); }

Complex ChebyshevExpansion::operator()(Complex z) const {
  Complex b1{}, b2{};
  for (int k = degree(); k >= 1; --k) {
    const Complex b0 = coefficients[static_cast<std::size_t>(k)] + 2.0 * z * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  if (coefficients.empty()) return {};
  return coefficients[0] + z * b1 - b2;
}

bool ChebyshevExpansion::is_real(double tol) const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [tol](const Complex& a) { return std::abs(a.imag()) <= tol; });
}

ChebyshevExpansion ChebyshevExpansion::conjugated() const {
  ChebyshevExpansion out = *this;
  for (Complex& a : out.coefficients) a = std::conj(a);
  return out;
}

double ellipse_bound(double rho, double m, int degree) {
  if (!(rho > 1.0)) throw DomainError("Bernstein ellipse parameter must exceed 1");
  if (!(m > 0.0)) throw DomainError("ellipse maximum must be positive");
  return 2.0 * m * std::pow(rho, -degree) / (rho - 1.0);
}

std::vector<Complex> chebyshev_coefficients(const std::function<Complex(double)>& f,
                                            int degree, int nodes) {
  if (degree < 0 || nodes <= degree) {
    throw DomainError("quadrature needs more nodes than the degree");
  }
  // cos(k theta_j) with theta_j = pi (2j + 1) / (2K) only takes values
  // cos(pi q / (2K)), q = k (2j + 1) mod 4K.
  const auto period = static_cast<std::size_t>(4 * nodes);
  std::vector<double> table(period);
  for (std::size_t q = 0; q < period; ++q) {
    table[q] = std::cos(std::numbers::pi * static_cast<double>(q) / (2.0 * nodes));
  }
  std::vector<Complex> samples(static_cast<std::size_t>(nodes));
  for (int j = 0; j < nodes; ++j) {
    samples[static_cast<std::size_t>(j)] = f(table[static_cast<std::size_t>(2 * j + 1)]);
  }
  std::vector<Complex> a(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) {
    Complex sum{};
    std::size_t q = static_cast<std::size_t>(k) % period;
    const std::size_t step = (2 * static_cast<std::size_t>(k)) % period;
    for (int j = 0; j < nodes; ++j) {
      sum += samples[static_cast<std::size_t>(j)] * table[q];
      q = (q + step) % period;
    }
    a[static_cast<std::size_t>(k)] = (k == 0 ? 1.0 : 2.0) * sum / static_cast<double>(nodes);
  }
  return a;
}

double ellipse_maximum(const std::function<Complex(Complex)>& f, double rho, int samples) {
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double t = 2.0 * std::numbers::pi * (s + 0.5) / samples;
    const Complex u = std::polar(rho, t);
    best = std::max(best, std::abs(f(0.5 * (u + 1.0 / u))));
  }
  return best;
}

double measured_uniform_error(const ChebyshevExpansion& p,
                              const std::function<Complex(double)>& f, int points) {
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const double x = -1.0 + 2.0 * i / (points - 1);
    worst = std::max(worst, std::abs(p(x) - f(x)));
  }
  return worst;
}

int fermi_dirac_degree(double alpha_beta, double eps) {
  if (alpha_beta <= 0.0) return 16;
  const double d = std::ceil((alpha_beta + 1.0) * std::log(2.2 * alpha_beta / eps));
  return std::clamp(static_cast<int>(std::min(d, static_cast<double>(kMaxDegree))), 16,
                    kMaxDegree);
}

ChebyshevExpansion fermi_dirac_expansion(double beta, double mu, double alpha, double eps) {
  if (!(beta >= 0.0)) throw DomainError("inverse temperature must be non-negative");
  if (!(alpha > 0.0)) throw DomainError("sub-normalization must be positive");
  if (!(std::abs(mu) < alpha)) throw DomainError("chemical potential must satisfy |mu| < alpha");
  if (!(eps < 1.0)) throw DomainError("target error must lie in (0, 1)");
  if (!(eps >= 1e-12)) {
    throw PrecisionError("target error below 1e-12 cannot be certified in double precision");
  }
  ChebyshevExpansion p;
  p.tag = "fermi-dirac";
  p.parameters = {{"beta", beta}, {"mu", mu}, {"alpha", alpha}, {"eps", eps}};
  const int d = fermi_dirac_degree(alpha * beta, eps);
  if (beta == 0.0) {
    p.coefficients.assign(static_cast<std::size_t>(d) + 1, Complex{});
    p.coefficients[0] = 0.5;
    p.rho = 2.0;
    p.ellipse_max = 0.5;
    p.error_bound = 0.0;
    return p;
  }
  auto f = [=](double x) { return fermi_dirac(Complex{beta * (alpha * x - mu), 0.0}); };
  auto fz = [=](Complex z) { return fermi_dirac(beta * (alpha * z - mu)); };
  p.coefficients = chebyshev_coefficients(f, d, 4 * d);
  for (Complex& a : p.coefficients) a = {a.real(), 0.0};
  p.rho = 1.0 + 1.0 / (alpha * beta);
  p.ellipse_max = ellipse_maximum(fz, p.rho);
  p.error_bound = std::max(ellipse_bound(p.rho, p.ellipse_max, d),
                           measured_uniform_error(p, f, 10000));
  return p;
}

Complex greens_coefficient(Complex z, double eta_scaled, int k) {
  Complex r = std::sqrt(z * z - 1.0);
  Complex w = z + r;
  if (std::abs(w) < 1.0) {
    r = -r;
    w = z + r;
  }
  return (k == 0 ? 1.0 : 2.0) * eta_scaled / (r * std::pow(w, k));
}

ChebyshevExpansion greens_expansion(double omega, double eta, double alpha, double eps,
                                    double window) {
  if (!(eta > 0.0)) throw DomainError("broadening eta must be positive");
  if (!(alpha > 0.0)) throw DomainError("sub-normalization must be positive");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("target error must lie in (0, 1)");
  if (eps < 1e-14) throw PrecisionError("target error below 1e-14 is not certifiable");
  const Complex z = Complex{omega, eta} / alpha;
  if (std::abs(z.real()) > window) {
    throw DomainError("omega / alpha = " + std::to_string(z.real()) + " lies outside [-" +
                      std::to_string(window) + ", " + std::to_string(window) +
                      "]; inflate alpha (e.g. double it)");
  }
  const double eta_scaled = eta / alpha;
  Complex r = std::sqrt(z * z - 1.0);
  Complex w = z + r;
  if (std::abs(w) < 1.0) {
    r = -r;
    w = z + r;
  }
  const double aw = std::abs(w);
  const double lead = 2.0 * eta_scaled / std::abs(r);
  auto tail = [&](int d) { return lead * std::pow(aw, -(d + 1)) / (1.0 - 1.0 / aw); };
  const double exact = std::log(lead / ((1.0 - 1.0 / aw) * eps)) / std::log(aw) - 1.0;
  if (!(exact < kMaxDegree)) throw PrecisionError("Green's expansion degree exceeds the cap");
  int d = std::max(16, static_cast<int>(std::ceil(exact)));
  while (tail(d) > eps) ++d;
  while (d > 16 && tail(d - 1) <= eps) --d;

  ChebyshevExpansion p;
  p.tag = "greens";
  p.parameters = {{"omega", omega}, {"eta", eta}, {"alpha", alpha}, {"eps", eps}};
  p.coefficients.resize(static_cast<std::size_t>(d) + 1);
  Complex power{1.0, 0.0};
  for (int k = 0; k <= d; ++k) {
    p.coefficients[static_cast<std::size_t>(k)] = (k == 0 ? 1.0 : 2.0) * eta_scaled / (r * power);
    power *= w;
  }
  p.rho = 0.5 * (1.0 + aw);
  p.ellipse_max = ellipse_maximum([=](Complex x) { return eta_scaled / (z - x); }, p.rho);
  p.error_bound = tail(d);
  return p;
}

int greens_reference_degree(double omega, double eta, double alpha, double eps) {
  const Complex z = Complex{omega, eta} / alpha;
  const double r = std::abs(std::sqrt(z * z - 1.0));
  return static_cast<int>(std::ceil(std::log(2.0 / (r * eps)) / std::log1p(eta / alpha)));
}

double estimate_norm(const SparseMatrix& a, int iterations) {
  if (a.rows() == 0) return 0.0;
  Vector v(a.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = 1.0 + 0.01 * static_cast<double>(i % 7);
  v.normalize();
  double sigma = 0.0;
  for (int it = 0; it < iterations; ++it) {
    Vector w = a.adjoint() * (a * v);
    const double nrm = w.norm();
    if (nrm == 0.0) return 0.0;
    sigma = std::sqrt(nrm);
    v = w / nrm;
  }
  return sigma;
}

double estimate_norm(const Matrix& a, int iterations) {
  return estimate_norm(SparseMatrix(a.sparseView()), iterations);
}

Matrix clenshaw_apply(const ChebyshevExpansion& p, const Matrix& h_scaled) {
  if (h_scaled.rows() != h_scaled.cols()) throw ContractViolation("matrix must be square");
  check_scaling(estimate_norm(h_scaled));
  const std::function<Matrix(const Matrix&)> apply = [&](const Matrix& x) -> Matrix {
    return h_scaled * x;
  };
  return clenshaw_loop<Matrix>(p, apply, Matrix::Identity(h_scaled.rows(), h_scaled.cols()));
}

Matrix clenshaw_apply_block(const ChebyshevExpansion& p, const SparseMatrix& h_scaled,
                           const Matrix& block) {
  if (h_scaled.cols() != block.rows()) throw ContractViolation("dimension mismatch");
  check_scaling(estimate_norm(h_scaled));
  const std::function<Matrix(const Matrix&)> apply = [&](const Matrix& x) -> Matrix {
    return h_scaled * x;
  };
  return clenshaw_loop<Matrix>(p, apply, block);
}

Vector clenshaw_apply(const ChebyshevExpansion& p, const SparseMatrix& h_scaled,
                      const Vector& v) {
  if (h_scaled.cols() != v.rows()) throw ContractViolation("dimension mismatch");
  check_scaling(estimate_norm(h_scaled));
  const std::function<Vector(const Vector&)> apply = [&](const Vector& x) -> Vector {
    return h_scaled * x;
  };
  return clenshaw_loop<Vector>(p, apply, v);
}

}  // namespace disqla
