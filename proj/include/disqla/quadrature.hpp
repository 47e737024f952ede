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

#ifndef DISQLA_QUADRATURE_HPP
#define DISQLA_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace disqla {

/// Chebyshev-Lobatto nodes x_j = cos(j pi / d) with W_j = int_{-1}^{1} L_j.
struct QuadratureGrid {
  int degree = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Clenshaw-Curtis weights in closed form; d >= 2.
QuadratureGrid lobatto_grid_weights(int degree);

/// sum_j W_j f(x_j) mapped onto [a, b].
std::complex<double> integrate(const QuadratureGrid& grid,
                               const std::function<std::complex<double>(double)>& f,
                               double a = -1.0, double b = 1.0);

/// 4 M rho^{-d} / (rho - 1).
double lobatto_interpolation_bound(double rho, double m, int degree);

/// Integration error bound 2 ((b - a) / 2) 4 M rho^{-d} / (rho - 1), with
/// rho scanned in (1, rho_max] and M taken numerically on the boundary of
/// the mapped ellipse.  `f` must be analytic inside E_{rho_max}.
double lobatto_error_bound(const std::function<std::complex<double>(std::complex<double>)>& f,
                           int degree, double rho_max, double a = -1.0, double b = 1.0);

}  // namespace disqla

#endif
