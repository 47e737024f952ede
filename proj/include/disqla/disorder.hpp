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

#ifndef DISQLA_DISORDER_HPP
#define DISQLA_DISORDER_HPP

#include <array>
#include <cstdint>

#include "disqla/keyed_random.hpp"
#include "disqla/lattice.hpp"

namespace disqla {

enum class DisorderKind { none, binary_alloy, structural, magnetic };

using PairTable = std::array<std::array<double, 2>, 2>;

/// Disorder ensemble.  Energies are in units of the hopping scale, lengths
/// in lattice constants.  Kinds other than binary_alloy use the type-0
/// parameters t_00 and gamma_00 only.
struct DisorderSpec {
  DisorderKind kind = DisorderKind::none;
  /// Probability p that a site carries atom type 1.
  double alloy_probability = 0.5;
  /// Amplitudes t_ab.
  PairTable hopping{{{-1.0, -1.0}, {-1.0, -1.0}}};
  /// Decay rates gamma_ab (inverse length).
  PairTable decay{{{0.0, 0.0}, {0.0, 0.0}}};
  /// Displacement bit width m' and half-width w (structural).
  int displacement_bits = 4;
  double displacement_width = 0.0;
  /// Precision m of the distance and phase registers.
  int precision_bits = 8;
  /// Upper bound d_max on bond lengths used by the distance quantizer.
  /// Zero selects the default: the smallest power of two strictly above
  /// the largest possible bond length.
  double max_distance = 0.0;
  RandomSource randomness;
};

/// Throws ConfigError on inconsistent parameters.
void validate(const DisorderSpec& spec, const Lattice& lattice);

/// Atom type of `site`: 1 iff keyed_random(k, site, n) < p * N.
int sample_atom_type(const DisorderSpec& spec, const Lattice& lattice,
                     std::uint64_t site);

/// Per-axis displacement w * (2u - 1), u = keyed_random(k, axis|site, m')/2^m'.
RealVec sample_displacement(const DisorderSpec& spec, const Lattice& lattice,
                            std::uint64_t site);

/// Quantized Peierls phase (m-bit integer) of the entry in row `row`,
/// column c(row, slot).  Drawn from input s*row + slot for the ordered pair
/// row < column and negated modulo 2^m for the reverse pair, so the
/// phases are antisymmetric.  Self-pairs and padded slots carry phase 0.
std::uint64_t peierls_phase_bits(const DisorderSpec& spec, const Lattice& lattice,
                                 std::uint64_t row, int slot);

/// Same phase in radians, in [0, 2 pi).
double sample_peierls_phase(const DisorderSpec& spec, const Lattice& lattice,
                            std::uint64_t row, int slot);

/// Largest bond length any slot can produce (clean length + 2 w sqrt(D)).
double max_bond_length(const DisorderSpec& spec, const Lattice& lattice);

/// Resolved d_max (explicit value or the power-of-two default).
double resolved_max_distance(const DisorderSpec& spec, const Lattice& lattice);

/// max(1, max |t_ab|) over the pairs the kind actually uses.
double hopping_scale(const DisorderSpec& spec);

}  // namespace disqla

#endif
