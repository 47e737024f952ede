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

#include "disqla/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "disqla/errors.hpp"

namespace disqla {

QuadratureGrid lobatto_grid_weights(int degree) {
  if (degree < 2) throw DomainError("Lobatto grid needs degree >= 2");
  QuadratureGrid g;
  g.degree = degree;
  const int d = degree;
  const double pi = std::numbers::pi;
  for (int j = 0; j <= d; ++j) {
    g.nodes.push_back(std::cos(j * pi / d));
    double s = 0.0;
    for (int k = 1; k <= d / 2; ++k) {
      const double b = (2 * k == d) ? 1.0 : 2.0;
      s += b / (4.0 * k * k - 1.0) * std::cos(2.0 * k * j * pi / d);
    }
    const double c = (j == 0 || j == d) ? 1.0 : 2.0;
    g.weights.push_back(c / d * (1.0 - s));
  }
  return g;
}

std::complex<double> integrate(const QuadratureGrid& grid,
                               const std::function<std::complex<double>(double)>& f, double a,
                               double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  std::complex<double> sum{};
  for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
    sum += grid.weights[j] * f(mid + half * grid.nodes[j]);
  }
  return half * sum;
}

double lobatto_interpolation_bound(double rho, double m, int degree) {
  if (!(rho > 1.0)) throw DomainError("Bernstein ellipse parameter must exceed 1");
  return 4.0 * m * std::pow(rho, -degree) / (rho - 1.0);
}

double lobatto_error_bound(const std::function<std::complex<double>(std::complex<double>)>& f,
                           int degree, double rho_max, double a, double b) {
  if (!(rho_max > 1.0)) throw DomainError("rho_max must exceed 1");
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  double best = std::numeric_limits<double>::infinity();
  constexpr int kSteps = 48;
  for (int s = 1; s <= kSteps; ++s) {
    const double rho = std::pow(rho_max, static_cast<double>(s) / kSteps);
    double m = 0.0;
    for (int t = 0; t < 512; ++t) {
      const std::complex<double> u = std::polar(rho, 2.0 * std::numbers::pi * (t + 0.5) / 512);
      m = std::max(m, std::abs(f(mid + half * 0.5 * (u + 1.0 / u))));
    }
    best = std::min(best, 2.0 * half * lobatto_interpolation_bound(rho, m, degree));
  }
  return best;
}

}  // namespace disqla
