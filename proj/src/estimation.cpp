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

#include "disqla/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "disqla/errors.hpp"
#include "disqla/keyed_random.hpp"

namespace disqla {

long qae_query_count(double eps, double delta) {
  if (!(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0)) {
    throw DomainError("eps and delta must lie in (0, 1)");
  }
  return static_cast<long>(std::ceil(kQueryConstant * std::log(1.0 / delta) / eps));
}

Complex matrix_element(const BlockEncoding& be, std::uint64_t i, std::uint64_t j) {
  return block_element(be, i, j);
}

EstimateRecord amplitude_estimate(double true_amplitude, double eps, double delta,
                                  std::uint64_t rng_key) {
  if (!(std::abs(true_amplitude) <= 1.0)) throw DomainError("amplitude must lie in [-1, 1]");
  EstimateRecord r;
  r.eps = eps;
  r.delta = delta;
  r.queries = qae_query_count(eps, delta);
  r.key = rng_key;
  std::mt19937_64 rng(siphash64(rng_key, 0x9AE));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double error = 0.0;
  if (unit(rng) >= delta) {
    std::normal_distribution<double> gauss(0.0, eps / 3.0);
    do {
      error = gauss(rng);
    } while (std::abs(error) > eps);
  } else {
    const double magnitude = eps * (2.0 - unit(rng));
    error = unit(rng) < 0.5 ? -magnitude : magnitude;
  }
  r.value = std::clamp(true_amplitude + error, -1.0, 1.0);
  return r;
}

Complex entangled_trace(const BlockEncoding& be) {
  const int n = be.system_qubits;
  const int width = be.total_qubits();
  if (width + n > 64) throw SizeError("entangled trace needs a copy of the system register");
  const std::uint64_t dim = be.system_dimension();
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  SparseState phi;
  phi.reserve(dim);
  for (std::uint64_t j = 0; j < dim; ++j) {
    phi.push_back({j | (j << width), Complex{amp, 0.0}});
  }
  normalize(phi);
  Circuit wide(width + n);
  wide.append(be.circuit);
  const SparseState out = wide.apply(phi);
  Complex sum{};
  auto it = out.begin();
  for (const Amplitude& a : phi) {
    it = std::lower_bound(it, out.end(), a.index,
                          [](const Amplitude& x, BasisIndex v) { return x.index < v; });
    if (it != out.end() && it->index == a.index) sum += std::conj(a.value) * it->value;
  }
  return be.alpha * sum;
}

EstimateRecord hutchinson_trace_estimate(const MatrixFreeAction& apply_f, std::uint64_t dim,
                                         int probes, std::uint64_t rng_key) {
  if (probes < 1) throw DomainError("at least one probe is required");
  std::mt19937_64 rng(siphash64(rng_key, 0x4A7C));
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  const auto n = static_cast<Eigen::Index>(dim);
  Complex mean{};
  double sum_sq = 0.0;
  std::vector<Complex> values;
  values.reserve(static_cast<std::size_t>(probes));
  for (int k = 0; k < probes; ++k) {
    Vector z(n);
    for (Eigen::Index i = 0; i < n; ++i) z(i) = (rng() & 1U) ? amp : -amp;
    const Complex v = z.dot(apply_f(z));
    values.push_back(v);
    mean += v;
  }
  mean /= static_cast<double>(probes);
  for (const Complex& v : values) sum_sq += std::norm(v - mean);
  EstimateRecord r;
  r.value = mean;
  r.samples = probes;
  r.key = rng_key;
  r.standard_error =
      probes > 1 ? std::sqrt(sum_sq / (probes - 1) / static_cast<double>(probes)) : 0.0;
  return r;
}

}  // namespace disqla
