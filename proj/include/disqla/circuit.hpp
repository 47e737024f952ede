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

#ifndef DISQLA_CIRCUIT_HPP
#define DISQLA_CIRCUIT_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace disqla {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Computational basis index; qubit q is bit q.
using BasisIndex = std::uint64_t;

struct Amplitude {
  BasisIndex index = 0;
  Complex value{};
};

/// Sparse state vector, sorted by index with unique entries.
using SparseState = std::vector<Amplitude>;

// Every gate acts on the "local index" formed by gathering the bits of its
// support qubits (support[k] becomes local bit k).

/// Classical reversible map on the support.
struct PermutationGate {
  std::string name;
  std::vector<int> support;
  std::function<std::uint64_t(std::uint64_t)> forward;
  std::function<std::uint64_t(std::uint64_t)> backward;
};

/// Diagonal unitary, local index -> phase.
struct DiagonalGate {
  std::string name;
  std::vector<int> support;
  std::function<Complex(std::uint64_t)> phase;
};

/// Single-qubit unitary on `target` selected by the value of `controls`.
struct MultiplexedGate {
  std::string name;
  int target = 0;
  std::vector<int> controls;
  std::vector<Eigen::Matrix2cd> table;  ///< one 2x2 unitary per control value
};

/// Explicit unitary on a few qubits.
struct DenseGate {
  std::string name;
  std::vector<int> support;
  Matrix matrix;
};

using Gate = std::variant<PermutationGate, DiagonalGate, MultiplexedGate, DenseGate>;

std::vector<int> gate_support(const Gate& gate);
const std::string& gate_name(const Gate& gate);
Gate gate_adjoint(const Gate& gate);
Gate gate_remapped(const Gate& gate, const std::vector<int>& qubit_map);

/// Applies one gate to a sparse state.
SparseState apply_gate(const Gate& gate, const SparseState& state);

/// ||G^dagger G - I|| for one gate, checked on its full support space.
/// Permutations are checked for bijectivity (0 or +inf).
double gate_unitarity_defect(const Gate& gate);

/// Sorts by index and merges duplicate indices; drops exact zeros.
void normalize(SparseState& state);

class Circuit {
 public:
  explicit Circuit(int num_qubits = 0);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }

  /// Gates are applied in insertion order.
  void append(Gate gate);
  void append(const Circuit& other);

  SparseState apply(SparseState state) const;
  SparseState apply_basis(BasisIndex index) const;

  Circuit adjoint() const;
  /// Moves qubit q to qubit_map[q] in a circuit of width `width`.
  Circuit remapped(const std::vector<int>& qubit_map, int width) const;

  /// Full matrix; throws SizeError above `max_qubits`.
  Matrix dense(int max_qubits = 12) const;

  /// Sum of per-gate unitarity defects, an upper bound for the whole circuit.
  double unitarity_defect() const;

 private:
  int num_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// Unitary whose first column is the uniform superposition over the
/// first `count` of 2^width basis states (Householder reflection).
Matrix uniform_preparation(int width, std::uint64_t count);

/// Largest singular value of a - b.
double operator_norm_distance(const Matrix& a, const Matrix& b);

}  // namespace disqla

#endif
