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

#ifndef DISQLA_BASELINE_HPP
#define DISQLA_BASELINE_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "disqla/chebyshev.hpp"

namespace disqla {

inline constexpr std::uint64_t kDenseCap = 4096;

struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;  ///< ascending
  Matrix vectors;
  /// max |h V - V diag(lambda)| and max |V^dagger V - I|.
  double residual = 0.0;
  double unitarity_defect = 0.0;
};

/// Full Hermitian eigendecomposition.  SizeError above `cap` rows,
/// ContractViolation when h is not Hermitian to 1e-12.
EigenDecomposition exact_diagonalize(const Matrix& h, std::uint64_t cap = kDenseCap);
EigenDecomposition exact_diagonalize(const SparseMatrix& h, std::uint64_t cap = kDenseCap);

/// V f(lambda) V^dagger.
Matrix matrix_function(const EigenDecomposition& eig, const std::function<Complex(double)>& f);

enum class ConeMode { restricted, full_lattice };

struct KpmElement {
  Complex value{};
  /// Sites within graph distance `degree` of j.
  std::uint64_t touched_sites = 0;
  int degree = 0;
};

/// Sites reachable from j in at most `depth` hops of h's sparsity graph,
/// ascending.
std::vector<std::uint64_t> light_cone(const SparseMatrix& h, std::uint64_t j, int depth);

/// [p(h / alpha)]_{ij} from the Chebyshev vector recurrence seeded at
/// |j>, without damping kernel.  The restricted mode runs the recurrence
/// on the submatrix of the light cone; both modes sum in the same order
/// and agree bit for bit.
KpmElement kpm_lightcone_element(const SparseMatrix& h, double alpha,
                                 const ChebyshevExpansion& p, std::uint64_t i,
                                 std::uint64_t j, ConeMode mode = ConeMode::restricted);

struct ScalingRow {
  int degree = 0;
  std::uint64_t touched_sites = 0;
  double median_seconds = 0.0;
};

struct ScalingTable {
  int dimension = 1;
  std::vector<int> extents;
  std::vector<ScalingRow> rows;
  /// Least-squares slope of log(touched) against log(d), and of log(time).
  double touched_exponent = 0.0;
  double time_exponent = 0.0;
  std::vector<std::string> warnings;
};

/// Nearest-neighbour open lattice in D dimensions, element at the centre
/// site.  Degrees whose cone would reach the boundary are dropped with a
/// warning.  Each degree runs one discarded warm-up and `repetitions`
/// timed evaluations.
ScalingTable benchmark_lightcone_scaling(int dimension, const std::vector<int>& degrees,
                                         int extent = 0, int repetitions = 5);

/// Default extent per dimension (1D 1024, 2D 256, 3D 64).
int default_benchmark_extent(int dimension);
/// Default degree range per dimension.
std::vector<int> default_benchmark_degrees(int dimension);

/// Least-squares slope of log y against log x.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

/// CSV with '#' machine metadata lines, then degree,touched_sites,median_seconds.
void write_scaling_csv(std::ostream& out, const ScalingTable& t);

}  // namespace disqla

#endif
