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

#ifndef DISQLA_QSVT_HPP
#define DISQLA_QSVT_HPP

#include "disqla/block_encoding.hpp"
#include "disqla/chebyshev.hpp"

namespace disqla {

/// Unitary dilation [[P, sqrt(I - P P^dag)], [sqrt(I - P^dag P), -P^dag]]
/// of a contraction P.  Throws ContractViolation when ||P|| > 1 + tol.
Matrix unitary_dilation(const Matrix& p, double tol = 1e-10);

/// sup |p(x)| over [-1, 1], sampled on a dense grid plus the Chebyshev
/// extrema.
double polynomial_sup_norm(const ChebyshevExpansion& p, int points = 10000);

/// Idealized QSVT: an encoding whose block is p(block(be) / alpha_be).
/// Polynomials with sup norm above 1 are rescaled and the factor is
/// returned as the new alpha.  One ancilla carries the dilation; the
/// query count is the degree times the input's.
BlockEncoding qsvt_simulate(const BlockEncoding& be, const ChebyshevExpansion& p);

}  // namespace disqla

#endif
