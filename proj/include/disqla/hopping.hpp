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

#ifndef DISQLA_HOPPING_HPP
#define DISQLA_HOPPING_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "disqla/disorder.hpp"
#include "disqla/lattice.hpp"

namespace disqla {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

/// A lattice plus one disorder realization.  Every per-bond quantity the
/// quantum oracles emit (column index, quantized distance, quantized
/// phase, atom type) is computed here, so classical assembly and the
/// block-encoding see identical integers.
class DisorderedModel {
 public:
  DisorderedModel(LatticeSpec lattice, DisorderSpec disorder);

  const Lattice& lattice() const { return lattice_; }
  const DisorderSpec& disorder() const { return disorder_; }
  std::uint64_t num_sites() const { return lattice_.num_sites(); }
  int sparsity() const { return lattice_.sparsity(); }
  int precision_bits() const { return disorder_.precision_bits; }
  double max_distance() const { return max_distance_; }
  /// True for the binary alloy, whose encoding acts on (site, type) pairs.
  bool doubled() const { return disorder_.kind == DisorderKind::binary_alloy; }

  int atom_type(std::uint64_t site) const { return types_[site]; }
  const std::vector<int>& atom_types() const { return types_; }
  const RealVec& displacement(std::uint64_t site) const { return displacements_[site]; }
  /// Displaced position of a site.
  RealVec position(std::uint64_t site) const;

  SlotTarget target(std::uint64_t j, int l) const { return lattice_.slot_target(j, l); }
  /// r_{c(j,l)} - r_j, following the slot offset (minimum image).
  RealVec bond_vector(std::uint64_t j, int l) const;
  /// floor(M |r_{c(j,l)} - r_j| / d_max), M = 2^m.
  std::uint64_t distance_bits(std::uint64_t j, int l) const;
  /// m-bit phase of the entry (c(j,l), j).
  std::uint64_t phase_bits(std::uint64_t j, int l) const;
  /// gamma_ab d_max / M, so that scaled_decay * distance_bits = gamma * d.
  double scaled_decay(int a, int b) const;

  /// t_ab exp(-scaled_decay * d~) exp(2 pi i phi~ / M) for slot l of
  /// column j with row type a and column type b.
  Complex entry_value(std::uint64_t j, int l, int a, int b) const;
  /// Entry value with the realized atom types; zero for padded slots.
  Complex slot_value(std::uint64_t j, int l) const;

  /// Sub-normalization: 2 s max(1, max|t_ab|) for the alloy, s max(1, |t|)
  /// otherwise.
  double alpha() const;

 private:
  Lattice lattice_;
  DisorderSpec disorder_;
  double max_distance_ = 1.0;
  std::vector<int> types_;
  std::vector<RealVec> displacements_;
};

/// One stored slot contribution.  Periodic images of the same pair stay
/// separate bonds and sum in the matrix.
struct Bond {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  Complex value{};
  RealVec vector{0.0, 0.0, 0.0};  ///< r_row - r_col
};

struct HoppingMatrix {
  std::uint64_t dimension = 0;
  int sparsity = 0;
  double alpha = 1.0;
  std::vector<Bond> bonds;
  SparseMatrix matrix;

  Matrix dense() const { return Matrix(matrix); }
  long max_row_nonzeros() const;
};

/// Builds the matrix from a bond list (bonds on the same entry add up).
HoppingMatrix from_bonds(std::uint64_t dimension, int sparsity, double alpha,
                         std::vector<Bond> bonds);

/// N x N disordered hopping matrix h^A.
HoppingMatrix assemble_hopping_matrix(const DisorderedModel& model);
HoppingMatrix assemble_hopping_matrix(const LatticeSpec& lattice,
                                      const DisorderSpec& disorder);

/// 2N x 2N matrix h~ over (site, type) pairs holding every type
/// combination, index 2 i + a.
HoppingMatrix assemble_doubled_hopping(const DisorderedModel& model);

/// P^A h~ P^A: the doubled matrix restricted to the realized types.
HoppingMatrix project_types(const HoppingMatrix& doubled, const std::vector<int>& types);

/// The matrix the full block-encoding targets: P^A h~ P^A for the alloy,
/// h itself for the other kinds.
HoppingMatrix encoded_target(const DisorderedModel& model);

/// Velocity operator [v]_ij = i h_ij (r_i - r_j)_axis, bond by bond.
HoppingMatrix velocity_operator(const HoppingMatrix& h, int axis);

/// Entrywise variant from raw positions; only meaningful without
/// periodic wrap-around.
SparseMatrix velocity_operator(const SparseMatrix& h, const std::vector<RealVec>& positions,
                               int axis);

/// Coordinate text: one "row col re im" line per stored nonzero.
void write_coordinate_text(std::ostream& out, const SparseMatrix& m);

}  // namespace disqla

#endif
