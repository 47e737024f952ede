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

#ifndef DISQLA_ESTIMATION_HPP
#define DISQLA_ESTIMATION_HPP

#include <cstdint>
#include <functional>

#include "disqla/block_encoding.hpp"

namespace disqla {

/// Constant C in the amplitude-estimation query model ceil(C ln(1/delta) / eps).
inline constexpr double kQueryConstant = 1.0;

struct EstimateRecord {
  Complex value{};
  double eps = 0.0;
  double delta = 0.0;
  long queries = 0;
  /// Probe count K of stochastic estimators, 0 otherwise.
  int samples = 0;
  /// Standard error of the mean; negative when not applicable.
  double standard_error = -1.0;
  std::uint64_t key = 0;
};

long qae_query_count(double eps, double delta);

/// alpha <0, i| U |0, j>, the quantity amplitude estimation targets.
Complex matrix_element(const BlockEncoding& be, std::uint64_t i, std::uint64_t j);

/// Simulated amplitude estimation of a real amplitude in [-1, 1].  With
/// probability 1 - delta the error is a Gaussian of scale eps/3 truncated
/// to [-eps, eps]; otherwise its magnitude is uniform in (eps, 2 eps].
EstimateRecord amplitude_estimate(double true_amplitude, double eps, double delta,
                                  std::uint64_t rng_key);

/// Tr(block) / dim evaluated as the amplitude of the maximally entangled
/// state of the system with a copy register, times alpha.
Complex entangled_trace(const BlockEncoding& be);

using MatrixFreeAction = std::function<Vector(const Vector&)>;

/// Mean of <z|F|z> over K Rademacher probes z_i = +-1/sqrt(N), an unbiased
/// estimate of Tr(F) / N.
EstimateRecord hutchinson_trace_estimate(const MatrixFreeAction& apply_f, std::uint64_t dim,
                                         int probes, std::uint64_t rng_key);

}  // namespace disqla

#endif
