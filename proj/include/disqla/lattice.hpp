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

#ifndef DISQLA_LATTICE_HPP
#define DISQLA_LATTICE_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace disqla {

enum class Boundary { open, periodic };

using IntVec = std::array<int, 3>;
using RealVec = std::array<double, 3>;

struct LatticeSpec {
  int dimension = 1;
  std::vector<int> extents{8};
  double lattice_constant = 1.0;
  Boundary boundary = Boundary::open;
  /// Hop cutoff radius in length units; a site counts as a neighbor when
  /// its clean-lattice distance is at most this value.
  double cutoff = 1.0;
  /// Largest admissible row sparsity s.
  int max_sparsity = 64;
};

struct Site {
  std::uint64_t index = 0;
  IntVec coords{0, 0, 0};
  RealVec position{0.0, 0.0, 0.0};
};

/// Where slot l of column j points.  Padded slots (open boundary, target
/// outside the lattice) point back at j and carry zero weight.
struct SlotTarget {
  std::uint64_t site = 0;
  bool padded = false;
};

/// Throws ConfigError if the spec is inconsistent.
void validate(const LatticeSpec& spec);

/// Validated lattice geometry with a fixed row-major index map (last axis
/// fastest) and an ordered list of hop offsets.  Slot 0 is always the
/// site itself; remaining slots are sorted by length, then
/// lexicographically.
class Lattice {
 public:
  explicit Lattice(LatticeSpec spec);

  const LatticeSpec& spec() const { return spec_; }
  int dimension() const { return spec_.dimension; }
  std::uint64_t num_sites() const { return num_sites_; }
  int site_bits() const { return site_bits_; }
  /// Row sparsity s (number of offsets within the cutoff, self included).
  int sparsity() const { return static_cast<int>(offsets_.size()); }
  /// Number of qubits needed to index the slots, ceil(log2 s).
  int slot_bits() const { return slot_bits_; }

  IntVec coords(std::uint64_t index) const;
  std::uint64_t index(const IntVec& coords) const;
  RealVec position(std::uint64_t index) const;

  const std::vector<IntVec>& offsets() const { return offsets_; }
  /// Slot holding the negated offset of slot l.
  int reverse_slot(int l) const { return reverse_[static_cast<std::size_t>(l)]; }
  SlotTarget slot_target(std::uint64_t j, int l) const;
  /// Clean-lattice bond vector of slot l in length units.
  RealVec offset_vector(int l) const;

  /// Volume of the unit cell (product of lattice constants).
  double cell_volume() const;

 private:
  LatticeSpec spec_;
  std::uint64_t num_sites_ = 0;
  int site_bits_ = 0;
  int slot_bits_ = 0;
  std::vector<IntVec> offsets_;
  std::vector<int> reverse_;
};

std::vector<Site> enumerate_sites(const LatticeSpec& spec);

int ceil_log2(std::uint64_t value);

}  // namespace disqla

#endif
