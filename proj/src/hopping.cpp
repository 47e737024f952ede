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

#include "disqla/hopping.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>

#include "disqla/errors.hpp"

namespace disqla {

DisorderedModel::DisorderedModel(LatticeSpec lattice, DisorderSpec disorder)
    : lattice_(std::move(lattice)), disorder_(disorder) {
  validate(disorder_, lattice_);
  max_distance_ = resolved_max_distance(disorder_, lattice_);
  const std::uint64_t n = lattice_.num_sites();
  types_.assign(n, 0);
  displacements_.assign(n, RealVec{0.0, 0.0, 0.0});
  for (std::uint64_t i = 0; i < n; ++i) {
    if (disorder_.kind == DisorderKind::binary_alloy) {
      types_[i] = sample_atom_type(disorder_, lattice_, i);
    } else if (disorder_.kind == DisorderKind::structural) {
      displacements_[i] = sample_displacement(disorder_, lattice_, i);
    }
  }
}

RealVec DisorderedModel::position(std::uint64_t site) const {
  RealVec r = lattice_.position(site);
  for (int a = 0; a < 3; ++a) r[a] += displacements_[site][a];
  return r;
}

RealVec DisorderedModel::bond_vector(std::uint64_t j, int l) const {
  const SlotTarget t = target(j, l);
  if (t.padded) return {0.0, 0.0, 0.0};
  RealVec v = lattice_.offset_vector(l);
  for (int a = 0; a < 3; ++a) v[a] += displacements_[t.site][a] - displacements_[j][a];
  return v;
}

std::uint64_t DisorderedModel::distance_bits(std::uint64_t j, int l) const {
  const RealVec v = bond_vector(j, l);
  const double d = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  const double scaled = std::ldexp(d, precision_bits()) / max_distance_;
  return static_cast<std::uint64_t>(std::floor(scaled));
}

std::uint64_t DisorderedModel::phase_bits(std::uint64_t j, int l) const {
  if (disorder_.kind != DisorderKind::magnetic) return 0;
  const SlotTarget t = target(j, l);
  if (t.padded) return 0;
  return peierls_phase_bits(disorder_, lattice_, t.site, lattice_.reverse_slot(l));
}

double DisorderedModel::scaled_decay(int a, int b) const {
  return disorder_.decay[a][b] * std::ldexp(max_distance_, -precision_bits());
}

Complex DisorderedModel::entry_value(std::uint64_t j, int l, int a, int b) const {
  const double t = disorder_.hopping[a][b];
  const double decay =
      std::exp(-scaled_decay(a, b) * static_cast<double>(distance_bits(j, l)));
  const double angle = 2.0 * std::numbers::pi *
                       std::ldexp(static_cast<double>(phase_bits(j, l)), -precision_bits());
  return t * decay * std::polar(1.0, angle);
}

Complex DisorderedModel::slot_value(std::uint64_t j, int l) const {
  const SlotTarget t = target(j, l);
  if (t.padded) return {0.0, 0.0};
  return entry_value(j, l, types_[t.site], types_[j]);
}

double DisorderedModel::alpha() const {
  const double s = static_cast<double>(sparsity());
  return (doubled() ? 2.0 : 1.0) * s * hopping_scale(disorder_);
}

long HoppingMatrix::max_row_nonzeros() const {
  long best = 0;
  for (Eigen::Index r = 0; r < matrix.outerSize(); ++r) {
    long count = 0;
    for (SparseMatrix::InnerIterator it(matrix, r); it; ++it) {
      if (it.value() != Complex{}) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

HoppingMatrix from_bonds(std::uint64_t dimension, int sparsity, double alpha,
                         std::vector<Bond> bonds) {
  HoppingMatrix h;
  h.dimension = dimension;
  h.sparsity = sparsity;
  h.alpha = alpha;
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(bonds.size());
  for (const Bond& b : bonds) {
    triplets.emplace_back(static_cast<int>(b.row), static_cast<int>(b.col), b.value);
  }
  h.matrix.resize(static_cast<Eigen::Index>(dimension), static_cast<Eigen::Index>(dimension));
  h.matrix.setFromTriplets(triplets.begin(), triplets.end());
  h.matrix.makeCompressed();
  h.bonds = std::move(bonds);
  return h;
}

HoppingMatrix assemble_hopping_matrix(const DisorderedModel& model) {
  std::vector<Bond> bonds;
  const std::uint64_t n = model.num_sites();
  bonds.reserve(n * static_cast<std::uint64_t>(model.sparsity()));
  for (std::uint64_t j = 0; j < n; ++j) {
    for (int l = 0; l < model.sparsity(); ++l) {
      const SlotTarget t = model.target(j, l);
      if (t.padded) continue;
      bonds.push_back({t.site, j, model.slot_value(j, l), model.bond_vector(j, l)});
    }
  }
  return from_bonds(n, model.sparsity(), model.alpha(), std::move(bonds));
}

HoppingMatrix assemble_hopping_matrix(const LatticeSpec& lattice,
                                      const DisorderSpec& disorder) {
  return assemble_hopping_matrix(DisorderedModel(lattice, disorder));
}

HoppingMatrix assemble_doubled_hopping(const DisorderedModel& model) {
  std::vector<Bond> bonds;
  const std::uint64_t n = model.num_sites();
  for (std::uint64_t j = 0; j < n; ++j) {
    for (int l = 0; l < model.sparsity(); ++l) {
      const SlotTarget t = model.target(j, l);
      if (t.padded) continue;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          bonds.push_back({2 * t.site + static_cast<std::uint64_t>(a),
                           2 * j + static_cast<std::uint64_t>(b),
                           model.entry_value(j, l, a, b), model.bond_vector(j, l)});
        }
      }
    }
  }
  return from_bonds(2 * n, 2 * model.sparsity(), model.alpha(), std::move(bonds));
}

HoppingMatrix project_types(const HoppingMatrix& doubled, const std::vector<int>& types) {
  if (doubled.dimension != 2 * types.size()) {
    throw ContractViolation("project_types: dimension mismatch");
  }
  std::vector<Bond> kept;
  for (const Bond& b : doubled.bonds) {
    const bool row_ok = static_cast<int>(b.row & 1U) == types[b.row / 2];
    const bool col_ok = static_cast<int>(b.col & 1U) == types[b.col / 2];
    if (row_ok && col_ok) kept.push_back(b);
  }
  return from_bonds(doubled.dimension, doubled.sparsity, doubled.alpha, std::move(kept));
}

HoppingMatrix encoded_target(const DisorderedModel& model) {
  if (model.doubled()) return project_types(assemble_doubled_hopping(model), model.atom_types());
  return assemble_hopping_matrix(model);
}

HoppingMatrix velocity_operator(const HoppingMatrix& h, int axis) {
  if (axis < 0 || axis > 2) throw DomainError("velocity axis must be 0, 1 or 2");
  std::vector<Bond> bonds;
  bonds.reserve(h.bonds.size());
  const Complex i_unit{0.0, 1.0};
  for (const Bond& b : h.bonds) {
    if (b.row == b.col && b.vector[axis] == 0.0) continue;
    Bond v = b;
    v.value = i_unit * b.value * b.vector[axis];
    bonds.push_back(v);
  }
  double vmax = 0.0;
  for (const Bond& b : bonds) vmax = std::max(vmax, std::abs(b.value));
  const double alpha = static_cast<double>(h.sparsity) * std::max(1.0, vmax);
  return from_bonds(h.dimension, h.sparsity, alpha, std::move(bonds));
}

SparseMatrix velocity_operator(const SparseMatrix& h, const std::vector<RealVec>& positions,
                               int axis) {
  if (axis < 0 || axis > 2) throw DomainError("velocity axis must be 0, 1 or 2");
  if (static_cast<Eigen::Index>(positions.size()) != h.rows()) {
    throw ContractViolation("velocity_operator: one position per row required");
  }
  std::vector<Eigen::Triplet<Complex>> triplets;
  const Complex i_unit{0.0, 1.0};
  for (Eigen::Index r = 0; r < h.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(h, r); it; ++it) {
      const double dx = positions[static_cast<std::size_t>(it.row())][axis] -
                        positions[static_cast<std::size_t>(it.col())][axis];
      if (it.row() == it.col()) continue;
      triplets.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()),
                            i_unit * it.value() * dx);
    }
  }
  SparseMatrix v(h.rows(), h.cols());
  v.setFromTriplets(triplets.begin(), triplets.end());
  return v;
}

void write_coordinate_text(std::ostream& out, const SparseMatrix& m) {
  out << std::setprecision(17);
  for (Eigen::Index r = 0; r < m.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
      out << it.row() << ' ' << it.col() << ' ' << it.value().real() << ' '
          << it.value().imag() << '\n';
    }
  }
}

}  // namespace disqla
