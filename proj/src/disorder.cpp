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

#include "disqla/disorder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "disqla/errors.hpp"

namespace disqla {

void validate(const DisorderSpec& spec, const Lattice& lattice) {
  if (!(spec.alloy_probability >= 0.0 && spec.alloy_probability <= 1.0)) {
    throw ConfigError("alloy probability must lie in [0, 1]");
  }
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      if (spec.hopping[a][b] != spec.hopping[b][a] ||
          spec.decay[a][b] != spec.decay[b][a]) {
        throw ConfigError("t_ab and gamma_ab must be symmetric in (a, b)");
      }
      if (!(spec.decay[a][b] >= 0.0)) {
        throw ConfigError("decay rates gamma_ab must be non-negative");
      }
      if (!std::isfinite(spec.hopping[a][b])) {
        throw ConfigError("hopping amplitudes must be finite");
      }
    }
  }
  if (spec.precision_bits < 1 || spec.precision_bits > 30) {
    throw ConfigError("precision bits m must lie in [1, 30]");
  }
  if (spec.displacement_bits < 1 || spec.displacement_bits > 30) {
    throw ConfigError("displacement bits m' must lie in [1, 30]");
  }
  if (!(spec.displacement_width >= 0.0) ||
      !(spec.displacement_width < 0.5 * lattice.spec().lattice_constant)) {
    throw ConfigError("displacement half-width must lie in [0, a/2)");
  }
  if (spec.randomness.mode == RandomMode::kwise_polynomial &&
      spec.randomness.independence < 1) {
    throw ConfigError("independence parameter t must be at least 1");
  }
  if (spec.max_distance != 0.0 &&
      !(spec.max_distance > max_bond_length(spec, lattice))) {
    throw ConfigError("max_distance must exceed the longest possible bond");
  }
}

int sample_atom_type(const DisorderSpec& spec, const Lattice& lattice,
                     std::uint64_t site) {
  const int n = lattice.site_bits();
  const std::uint64_t o = keyed_random(spec.randomness, site, n, n);
  const double threshold =
      spec.alloy_probability * static_cast<double>(lattice.num_sites());
  return static_cast<double>(o) < threshold ? 1 : 0;
}

RealVec sample_displacement(const DisorderSpec& spec, const Lattice& lattice,
                            std::uint64_t site) {
  RealVec u{0.0, 0.0, 0.0};
  const int n = lattice.site_bits();
  const int bits = spec.displacement_bits;
  const double scale = std::ldexp(1.0, -bits);
  for (int axis = 0; axis < lattice.dimension(); ++axis) {
    const std::uint64_t tagged = (static_cast<std::uint64_t>(axis) << n) | site;
    const double frac =
        static_cast<double>(keyed_random(spec.randomness, tagged, n + 2, bits)) * scale;
    u[axis] = spec.displacement_width * (2.0 * frac - 1.0);
  }
  return u;
}

std::uint64_t peierls_phase_bits(const DisorderSpec& spec, const Lattice& lattice,
                                 std::uint64_t row, int slot) {
  const SlotTarget target = lattice.slot_target(row, slot);
  if (target.padded || target.site == row) return 0;
  const int m = spec.precision_bits;
  const std::uint64_t modulus = std::uint64_t{1} << m;
  const auto s = static_cast<std::uint64_t>(lattice.sparsity());
  const int input_bits = lattice.site_bits() + lattice.slot_bits();
  if (row < target.site) {
    return keyed_random(spec.randomness, s * row + static_cast<std::uint64_t>(slot),
                        input_bits, m);
  }
  const int back = lattice.reverse_slot(slot);
  const std::uint64_t drawn = keyed_random(
      spec.randomness, s * target.site + static_cast<std::uint64_t>(back),
      input_bits, m);
  return (modulus - drawn) % modulus;
}

double sample_peierls_phase(const DisorderSpec& spec, const Lattice& lattice,
                            std::uint64_t row, int slot) {
  const double bits =
      static_cast<double>(peierls_phase_bits(spec, lattice, row, slot));
  return 2.0 * std::numbers::pi * std::ldexp(bits, -spec.precision_bits);
}

double max_bond_length(const DisorderSpec& spec, const Lattice& lattice) {
  double longest = 0.0;
  for (int l = 0; l < lattice.sparsity(); ++l) {
    const RealVec v = lattice.offset_vector(l);
    longest = std::max(longest, std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]));
  }
  const double jitter = spec.kind == DisorderKind::structural
                            ? 2.0 * spec.displacement_width *
                                  std::sqrt(static_cast<double>(lattice.dimension()))
                            : 0.0;
  return longest + jitter;
}

double resolved_max_distance(const DisorderSpec& spec, const Lattice& lattice) {
  if (spec.max_distance != 0.0) return spec.max_distance;
  const double bound = max_bond_length(spec, lattice);
  if (bound <= 0.0) return 1.0;
  double d = std::exp2(std::ceil(std::log2(bound)));
  if (d <= bound) d *= 2.0;
  return d;
}

double hopping_scale(const DisorderSpec& spec) {
  double t = std::abs(spec.hopping[0][0]);
  if (spec.kind == DisorderKind::binary_alloy) {
    t = std::max({t, std::abs(spec.hopping[0][1]), std::abs(spec.hopping[1][1])});
  }
  return std::max(1.0, t);
}

}  // namespace disqla
