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

// Independent reference computations used by the tests.  Nothing here
// calls the Chebyshev, Clenshaw or encoding code under test.

#ifndef DISQLA_TESTS_ORACLES_HPP
#define DISQLA_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// f(h) = V f(lambda) V^dagger from a dense Hermitian eigensolve.
inline Matrix dense_function(const Matrix& h, const std::function<Complex(double)>& f) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Eigen::VectorXcd fl(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < fl.size(); ++k) fl(k) = f(es.eigenvalues()(k));
  return es.eigenvectors() * fl.asDiagonal() * es.eigenvectors().adjoint();
}

inline double fermi(double x, double beta) { return 0.5 * (1.0 - std::tanh(0.5 * beta * x)); }

/// Dense (omega + i eta - h)^{-1}.
inline Matrix resolvent(const Matrix& h, double omega, double eta) {
  const Matrix a = Complex{omega, eta} * Matrix::Identity(h.rows(), h.cols()) - h;
  return a.inverse();
}

/// Tridiagonal chain with hopping t on nearest neighbours.
inline Matrix chain(int n, double t, bool periodic) {
  Matrix h = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) h(i, i + 1) = h(i + 1, i) = t;
  if (periodic && n > 2) h(0, n - 1) = h(n - 1, 0) = t;
  return h;
}

/// a_k = (2 - delta_k0) / pi int_0^pi f(cos theta) cos(k theta) dtheta by
/// adaptive Gauss-Kronrod.
inline Complex chebyshev_coefficient(const std::function<Complex(double)>& f, int k) {
  using boost::math::quadrature::gauss_kronrod;
  auto g = [&](double th) { return f(std::cos(th)) * std::cos(k * th); };
  const double scale = (k == 0 ? 1.0 : 2.0) / std::numbers::pi;
  return scale * gauss_kronrod<double, 61>::integrate(g, 0.0, std::numbers::pi, 15, 1e-13);
}

/// Adaptive reference integral of a complex function on [a, b].  The
/// tolerance is relative to the integral of |f|.
inline Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                         double tol = 1e-13, unsigned depth = 20) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 61>::integrate(f, a, b, depth, tol);
}

/// Upper-tail probability of a chi-square statistic.
inline double chi_square_p(double statistic, double dof) {
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

struct SlopeFit {
  double slope = 0.0;
  double standard_error = 0.0;
  double p_negative = 1.0;  ///< one-sided p-value for slope < 0
};

/// Ordinary least squares y = a + b x with a t-test on b.
inline SlopeFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  SlopeFit fit;
  fit.slope = sxy / sxx;
  const double a = my - fit.slope * mx;
  double rss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - a - fit.slope * x[i];
    rss += r * r;
  }
  fit.standard_error = std::sqrt(rss / (n - 2.0) / sxx);
  boost::math::students_t dist(n - 2.0);
  fit.p_negative = boost::math::cdf(dist, fit.slope / fit.standard_error);
  return fit;
}

/// Kubo-Bastin integrand at energy E from exact eigenpairs:
/// f(E - mu) / N Tr[vx S vy (-G^2) - h.c.], S = -(G - G^dagger) / (2 pi i).
inline Complex kubo_integrand_eigen(const Eigen::VectorXd& lambda, const Matrix& vx_eig,
                                    const Matrix& vy_eig, double energy, double eta, double beta,
                                    double mu) {
  const Eigen::Index n = lambda.size();
  Eigen::VectorXcd g(n), s(n), dg(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    g(k) = 1.0 / Complex{energy - lambda(k), eta};
    s(k) = -(g(k) - std::conj(g(k))) / (Complex{0.0, 2.0} * std::numbers::pi);
    dg(k) = -g(k) * g(k);
  }
  Complex tr{};
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) tr += vx_eig(a, b) * s(b) * vy_eig(b, a) * dg(a);
  }
  return fermi(energy - mu, beta) * (tr - std::conj(tr)) / static_cast<double>(n);
}

}  // namespace oracle

#endif
