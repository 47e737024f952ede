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

#ifndef DISQLA_BLOCK_ENCODING_HPP
#define DISQLA_BLOCK_ENCODING_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "disqla/circuit.hpp"
#include "disqla/hopping.hpp"

namespace disqla {

/// Unitary on system + ancilla qubits.  System qubits come first
/// (qubits 0 .. system_qubits-1); the encoded block is the one with every
/// ancilla in |0>.
struct BlockEncoding {
  std::string name;
  Circuit circuit;
  int system_qubits = 0;
  int ancilla_qubits = 0;
  double alpha = 1.0;
  /// Number of queries to the underlying sparse-access oracles.
  long queries = 1;

  int total_qubits() const { return system_qubits + ancilla_qubits; }
  std::uint64_t system_dimension() const { return std::uint64_t{1} << system_qubits; }
};

/// Identity encoding on `system_qubits` qubits with alpha = 1.
BlockEncoding identity_encoding(int system_qubits);

/// alpha (<0|^a x I) U (|0>^a x I), evaluated column by column.
Matrix extract_block(const BlockEncoding& be);

/// alpha <0, i| U |0, j>.
Complex block_element(const BlockEncoding& be, std::uint64_t i, std::uint64_t j);

/// Encoding of block(a) * block(b); the ancilla registers are kept
/// separate so the product block sits at all-zero flags.
BlockEncoding multiply(const BlockEncoding& a, const BlockEncoding& b);

BlockEncoding adjoint(const BlockEncoding& be);

struct UnitarityReport {
  /// Sum of per-gate defects (upper bound for the whole circuit).
  double gate_defect = 0.0;
  /// max |G - I| over the Gram matrix of the sampled columns.
  double sampled_gram_defect = 0.0;
  /// ||U^dagger U - I|| when the circuit was small enough to materialize,
  /// negative otherwise.
  double dense_defect = -1.0;
  int sampled_columns = 0;

  double worst() const;
};

/// Checks unitarity per gate, on the block columns plus `extra_columns`
/// random basis columns, and densely when total qubits <= dense_cap.
UnitarityReport check_unitarity(const BlockEncoding& be, int dense_cap = 10,
                                int extra_columns = 16);

/// Full encoding of the disordered hopping matrix: P^A h~ P^A for the
/// binary alloy (system index 2 site + type), h for the other kinds.
BlockEncoding assemble_full_encoding(const DisorderedModel& model);
BlockEncoding assemble_full_encoding(const LatticeSpec& lattice, const DisorderSpec& disorder,
                                     int qubit_cap = 64);

/// max-entry deviation between (h^A)^d and 2 (I x <+|)(h~^A)^d (I x |+>),
/// both taken on the encoded scale h / alpha.  (h~^A)^0 is read as P^A,
/// the identity on the range of h~^A.
double verify_plus_projection(const DisorderedModel& model, int degree);

/// Metadata line plus the dense unitary in coordinate text.
void export_encoding(std::ostream& out, const BlockEncoding& be, int dense_cap = 10);

}  // namespace disqla

#endif
