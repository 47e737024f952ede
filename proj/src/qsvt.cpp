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

#include "disqla/qsvt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "disqla/errors.hpp"

namespace disqla {

Matrix unitary_dilation(const Matrix& p, double tol) {
  if (p.rows() != p.cols()) throw ContractViolation("dilation needs a square block");
  Eigen::JacobiSVD<Matrix> svd(p, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd sigma = svd.singularValues();
  if (sigma.size() > 0 && sigma(0) > 1.0 + tol) {
    throw ContractViolation("block norm " + std::to_string(sigma(0)) + " exceeds 1");
  }
  const Eigen::VectorXd clipped = sigma.cwiseMin(1.0);
  const Eigen::VectorXd comp = (1.0 - clipped.array().square()).max(0.0).sqrt().matrix();
  const Matrix& u = svd.matrixU();
  const Matrix& v = svd.matrixV();
  const Matrix pc = u * clipped.asDiagonal() * v.adjoint();
  const Eigen::Index n = p.rows();
  Matrix w(2 * n, 2 * n);
  w.topLeftCorner(n, n) = pc;
  w.topRightCorner(n, n) = u * comp.asDiagonal() * u.adjoint();
  w.bottomLeftCorner(n, n) = v * comp.asDiagonal() * v.adjoint();
  w.bottomRightCorner(n, n) = -pc.adjoint();
  return w;
}

double polynomial_sup_norm(const ChebyshevExpansion& p, int points) {
  double sup = 0.0;
  for (int i = 0; i < points; ++i) {
    sup = std::max(sup, std::abs(p(-1.0 + 2.0 * i / (points - 1))));
  }
  const int d = std::max(1, p.degree());
  for (int j = 0; j <= d; ++j) sup = std::max(sup, std::abs(p(std::cos(j * std::numbers::pi / d))));
  return sup;
}

BlockEncoding qsvt_simulate(const BlockEncoding& be, const ChebyshevExpansion& p) {
  const Matrix block = extract_block(be) / be.alpha;
  const double sup = polynomial_sup_norm(p);
  const double scale = std::max(1.0, sup);
  const Matrix value = clenshaw_apply(p, block) / scale;
  BlockEncoding out;
  out.name = p.tag + "(" + be.name + ")";
  out.system_qubits = be.system_qubits;
  out.ancilla_qubits = 1;
  out.alpha = scale;
  out.queries = static_cast<long>(std::max(0, p.degree())) * std::max(1L, be.queries);
  out.circuit = Circuit(be.system_qubits + 1);
  std::vector<int> support;
  for (int q = 0; q <= be.system_qubits; ++q) support.push_back(q);
  out.circuit.append(DenseGate{"qsvt", support, unitary_dilation(value)});
  return out;
}

}  // namespace disqla
