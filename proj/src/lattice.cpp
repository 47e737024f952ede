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

#include "disqla/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "disqla/errors.hpp"

namespace disqla {

namespace {

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

int squared_length(const IntVec& v) {
  return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
}

}  // namespace

int ceil_log2(std::uint64_t value) {
  int bits = 0;
  while ((std::uint64_t{1} << bits) < value) ++bits;
  return bits;
}

void validate(const LatticeSpec& spec) {
  if (spec.dimension < 1 || spec.dimension > 3) {
    throw ConfigError("lattice dimension must be 1, 2 or 3, got " +
                      std::to_string(spec.dimension));
  }
  if (static_cast<int>(spec.extents.size()) != spec.dimension) {
    throw ConfigError("lattice needs exactly " +
                      std::to_string(spec.dimension) + " extents");
  }
  std::uint64_t n = 1;
  for (int e : spec.extents) {
    if (e < 1 || !is_power_of_two(static_cast<std::uint64_t>(e))) {
      throw ConfigError("lattice extent " + std::to_string(e) +
                        " is not a power of two");
    }
    n *= static_cast<std::uint64_t>(e);
  }
  if (n < 2 || n > (std::uint64_t{1} << 30)) {
    throw ConfigError("number of sites must lie in [2, 2^30]");
  }
  if (!(spec.lattice_constant > 0.0)) {
    throw ConfigError("lattice constant must be positive");
  }
  if (!(spec.cutoff >= 0.0)) {
    throw ConfigError("hop cutoff must be non-negative");
  }
  if (spec.max_sparsity < 1) {
    throw ConfigError("sparsity cap must be positive");
  }
}

Lattice::Lattice(LatticeSpec spec) : spec_(std::move(spec)) {
  validate(spec_);
  num_sites_ = 1;
  for (int e : spec_.extents) num_sites_ *= static_cast<std::uint64_t>(e);
  site_bits_ = ceil_log2(num_sites_);

  const double reach = spec_.cutoff / spec_.lattice_constant;
  const int radius = static_cast<int>(std::floor(reach + 1e-9));
  const double reach2 = reach * reach + 1e-9;
  const int d = spec_.dimension;
  IntVec delta{0, 0, 0};
  const int lo = -radius;
  const int hi = radius;
  for (int x = lo; x <= hi; ++x) {
    for (int y = (d > 1 ? lo : 0); y <= (d > 1 ? hi : 0); ++y) {
      for (int z = (d > 2 ? lo : 0); z <= (d > 2 ? hi : 0); ++z) {
        delta = {x, y, z};
        if (squared_length(delta) <= reach2) offsets_.push_back(delta);
      }
    }
  }
  std::sort(offsets_.begin(), offsets_.end(),
            [](const IntVec& a, const IntVec& b) {
              const int la = squared_length(a);
              const int lb = squared_length(b);
              if (la != lb) return la < lb;
              return a < b;
            });
  if (static_cast<int>(offsets_.size()) > spec_.max_sparsity) {
    throw ConfigError("hop cutoff gives sparsity " +
                      std::to_string(offsets_.size()) + " above the cap " +
                      std::to_string(spec_.max_sparsity));
  }
  slot_bits_ = ceil_log2(offsets_.size());

  reverse_.resize(offsets_.size());
  for (std::size_t l = 0; l < offsets_.size(); ++l) {
    const IntVec neg{-offsets_[l][0], -offsets_[l][1], -offsets_[l][2]};
    const auto it = std::find(offsets_.begin(), offsets_.end(), neg);
    reverse_[l] = static_cast<int>(it - offsets_.begin());
  }
}

IntVec Lattice::coords(std::uint64_t index) const {
  IntVec c{0, 0, 0};
  for (int a = spec_.dimension - 1; a >= 0; --a) {
    const auto e = static_cast<std::uint64_t>(spec_.extents[a]);
    c[a] = static_cast<int>(index % e);
    index /= e;
  }
  return c;
}

std::uint64_t Lattice::index(const IntVec& c) const {
  std::uint64_t idx = 0;
  for (int a = 0; a < spec_.dimension; ++a) {
    idx = idx * static_cast<std::uint64_t>(spec_.extents[a]) +
          static_cast<std::uint64_t>(c[a]);
  }
  return idx;
}

RealVec Lattice::position(std::uint64_t index) const {
  const IntVec c = coords(index);
  RealVec r{0.0, 0.0, 0.0};
  for (int a = 0; a < spec_.dimension; ++a) {
    r[a] = spec_.lattice_constant * c[a];
  }
  return r;
}

SlotTarget Lattice::slot_target(std::uint64_t j, int l) const {
  IntVec c = coords(j);
  const IntVec& delta = offsets_[static_cast<std::size_t>(l)];
  for (int a = 0; a < spec_.dimension; ++a) {
    const int e = spec_.extents[a];
    int v = c[a] + delta[a];
    if (spec_.boundary == Boundary::periodic) {
      v = ((v % e) + e) % e;
    } else if (v < 0 || v >= e) {
      return {j, true};
    }
    c[a] = v;
  }
  return {index(c), false};
}

RealVec Lattice::offset_vector(int l) const {
  const IntVec& delta = offsets_[static_cast<std::size_t>(l)];
  return {spec_.lattice_constant * delta[0], spec_.lattice_constant * delta[1],
          spec_.lattice_constant * delta[2]};
}

double Lattice::cell_volume() const {
  return std::pow(spec_.lattice_constant, spec_.dimension);
}

std::vector<Site> enumerate_sites(const LatticeSpec& spec) {
  const Lattice lattice(spec);
  std::vector<Site> sites;
  sites.reserve(lattice.num_sites());
  for (std::uint64_t i = 0; i < lattice.num_sites(); ++i) {
    sites.push_back({i, lattice.coords(i), lattice.position(i)});
  }
  return sites;
}

}  // namespace disqla
