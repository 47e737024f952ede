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

#include "disqla/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "disqla/errors.hpp"

namespace disqla {

namespace {

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<int> range(int& next, int count) {
  std::vector<int> out;
  for (int k = 0; k < count; ++k) out.push_back(next++);
  return out;
}

std::uint64_t mask(int bits) { return (std::uint64_t{1} << bits) - 1; }

Eigen::Matrix2cd rotation(double amplitude) {
  const double c = std::clamp(amplitude, 0.0, 1.0);
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  Eigen::Matrix2cd u;
  u << c, -s, s, c;
  return u;
}

// Classical reversible XOR of a tabulated value into a target register.
Gate xor_table_gate(std::string name, std::shared_ptr<const SparseAccessOracles> o,
                    const EncodingLayout& layout, const std::vector<int>& target,
                    const std::vector<std::uint64_t> SparseAccessOracles::*table) {
  const int b = o->slot_bits;
  const int n = o->site_bits;
  const auto s = static_cast<std::uint64_t>(o->sparsity);
  auto f = [o, b, n, s, table](std::uint64_t x) {
    const std::uint64_t l = x & mask(b);
    const std::uint64_t j = (x >> b) & mask(n);
    if (l >= s) return x;
    const std::uint64_t v = ((*o).*table)[l * o->num_sites + j];
    return x ^ (v << (b + n));
  };
  return PermutationGate{std::move(name), concat({layout.slot, layout.site, target}), f, f};
}

}  // namespace

std::uint64_t SparseAccessOracles::column_index(int l, std::uint64_t j) const {
  return column[static_cast<std::uint64_t>(l) * num_sites + j];
}

bool SparseAccessOracles::is_padded(int l, std::uint64_t j) const {
  return padded[static_cast<std::uint64_t>(l) * num_sites + j] != 0;
}

std::uint64_t SparseAccessOracles::distance_bits(int l, std::uint64_t j) const {
  return distance[static_cast<std::uint64_t>(l) * num_sites + j];
}

std::uint64_t SparseAccessOracles::phase_bits(int l, std::uint64_t j) const {
  return phase[static_cast<std::uint64_t>(l) * num_sites + j];
}

SparseAccessOracles make_oracles(const DisorderedModel& model) {
  SparseAccessOracles o;
  o.num_sites = model.num_sites();
  o.sparsity = model.sparsity();
  o.site_bits = model.lattice().site_bits();
  o.slot_bits = model.lattice().slot_bits();
  o.precision_bits = model.precision_bits();
  const std::uint64_t total = o.num_sites * static_cast<std::uint64_t>(o.sparsity);
  o.column.resize(total);
  o.padded.resize(total);
  o.distance.resize(total);
  o.phase.resize(total);
  for (int l = 0; l < o.sparsity; ++l) {
    o.reverse.push_back(model.lattice().reverse_slot(l));
    for (std::uint64_t j = 0; j < o.num_sites; ++j) {
      const std::uint64_t at = static_cast<std::uint64_t>(l) * o.num_sites + j;
      const SlotTarget t = model.target(j, l);
      o.column[at] = t.padded ? j : t.site;
      o.padded[at] = t.padded ? 1 : 0;
      o.distance[at] = model.distance_bits(j, l);
      o.phase[at] = model.phase_bits(j, l);
    }
  }
  return o;
}

EncodingLayout make_layout(const DisorderedModel& model) {
  EncodingLayout layout;
  const bool doubled = model.doubled();
  const bool magnetic = model.disorder().kind == DisorderKind::magnetic;
  const int m = model.precision_bits();
  int q = 0;
  if (doubled) layout.type = q++;
  layout.site = range(q, model.lattice().site_bits());
  layout.system_qubits = q;
  layout.slot = range(q, model.lattice().slot_bits());
  if (doubled) layout.selector = q++;
  layout.distance = range(q, m);
  if (magnetic) layout.phase = range(q, m);
  layout.flags = range(q, m);
  layout.pad = q++;
  if (doubled) {
    layout.keyed = range(q, model.lattice().site_bits());
    layout.comparator = q++;
    layout.projector_in = q++;
    layout.projector_out = q++;
  }
  layout.total_qubits = q;
  if (q > 64) {
    throw SizeError("encoding needs " + std::to_string(q) +
                    " qubits, above the 64-qubit simulator limit");
  }
  return layout;
}

Gate column_index_gate(std::shared_ptr<const SparseAccessOracles> o,
                       const EncodingLayout& layout) {
  const int b = o->slot_bits;
  const int n = o->site_bits;
  const bool doubled = layout.selector >= 0;
  auto f = [o, b, n, doubled](std::uint64_t x) {
    const std::uint64_t l = x & mask(b);
    const std::uint64_t j = (x >> b) & mask(n);
    std::uint64_t out = x;
    if (l < static_cast<std::uint64_t>(o->sparsity) && !o->is_padded(static_cast<int>(l), j)) {
      const auto back = static_cast<std::uint64_t>(o->reverse[l]);
      const std::uint64_t c = o->column_index(static_cast<int>(l), j);
      out = (out & ~mask(b + n)) | back | (c << b);
    }
    if (doubled) {
      const std::uint64_t sel = (x >> (b + n)) & 1U;
      const std::uint64_t type = (x >> (b + n + 1)) & 1U;
      out = (out & ~(std::uint64_t{3} << (b + n))) | (type << (b + n)) | (sel << (b + n + 1));
    }
    return out;
  };
  std::vector<int> support = concat({layout.slot, layout.site});
  if (doubled) {
    support.push_back(layout.selector);
    support.push_back(layout.type);
  }
  return PermutationGate{"O_c", support, f, f};
}

Gate distance_gate(std::shared_ptr<const SparseAccessOracles> oracles,
                   const EncodingLayout& layout) {
  return xor_table_gate("O_d", std::move(oracles), layout, layout.distance,
                        &SparseAccessOracles::distance);
}

Gate phase_bits_gate(std::shared_ptr<const SparseAccessOracles> oracles,
                     const EncodingLayout& layout) {
  return xor_table_gate("O_phi", std::move(oracles), layout, layout.phase,
                        &SparseAccessOracles::phase);
}

Gate pad_gate(std::shared_ptr<const SparseAccessOracles> o, const EncodingLayout& layout) {
  const int b = o->slot_bits;
  const int n = o->site_bits;
  auto f = [o, b, n](std::uint64_t x) {
    const std::uint64_t l = x & mask(b);
    const std::uint64_t j = (x >> b) & mask(n);
    const bool invalid = l >= static_cast<std::uint64_t>(o->sparsity) ||
                         o->is_padded(static_cast<int>(l), j);
    return invalid ? x ^ (std::uint64_t{1} << (b + n)) : x;
  };
  return PermutationGate{"pad", concat({layout.slot, layout.site, {layout.pad}}), f, f};
}

Circuit amplitude_stage(const DisorderedModel& model, const EncodingLayout& layout) {
  const DisorderSpec& spec = model.disorder();
  const int m = model.precision_bits();
  const bool doubled = layout.selector >= 0;
  const double tmax = hopping_scale(spec);
  Circuit c(layout.total_qubits);
  const int pairs = doubled ? 2 : 1;
  for (int k = 0; k < m; ++k) {
    MultiplexedGate g;
    g.name = "U_" + std::to_string(k);
    g.target = layout.flags[static_cast<std::size_t>(k)];
    g.controls = {layout.distance[static_cast<std::size_t>(k)]};
    if (doubled) {
      g.controls.push_back(layout.selector);
      g.controls.push_back(layout.type);
    }
    // control value = bit + 2 a + 4 b with a the row type, b the column type
    for (int b = 0; b < pairs; ++b) {
      for (int a = 0; a < pairs; ++a) {
        const double root = std::pow(std::abs(spec.hopping[a][b]) / tmax, 1.0 / m);
        for (int bit = 0; bit < 2; ++bit) {
          const double decay = std::exp(-model.scaled_decay(a, b) * std::ldexp(1.0, k) * bit);
          g.table.push_back(rotation(root * decay));
        }
      }
    }
    c.append(std::move(g));
  }
  std::vector<int> selectors;
  if (doubled) selectors = {layout.selector, layout.type};
  else selectors = {layout.flags.front()};
  auto sign = [spec, doubled](std::uint64_t x) {
    const int a = doubled ? static_cast<int>(x & 1U) : 0;
    const int b = doubled ? static_cast<int>((x >> 1) & 1U) : 0;
    return spec.hopping[a][b] < 0.0 ? Complex{-1.0, 0.0} : Complex{1.0, 0.0};
  };
  c.append(DiagonalGate{"sign", selectors, sign});
  return c;
}

BlockEncoding build_amplitude_oracle(double gamma_tilde, double t, int m) {
  if (!(gamma_tilde >= 0.0)) {
    throw DomainError("negative decay rate would push the amplitude above 1");
  }
  if (m < 1 || m > 30) throw DomainError("precision bits must lie in [1, 30]");
  const double tmax = std::max(1.0, std::abs(t));
  const double root = std::pow(std::abs(t) / tmax, 1.0 / m);
  BlockEncoding be;
  be.name = "O_e";
  be.system_qubits = m;
  be.ancilla_qubits = m;
  be.alpha = tmax;
  be.circuit = Circuit(2 * m);
  for (int k = 0; k < m; ++k) {
    MultiplexedGate g{"U_" + std::to_string(k), m + k, {k}, {}};
    g.table.push_back(rotation(root));
    g.table.push_back(rotation(root * std::exp(-gamma_tilde * std::ldexp(1.0, k))));
    be.circuit.append(std::move(g));
  }
  if (t < 0.0) {
    be.circuit.append(DiagonalGate{"sign", {m}, [](std::uint64_t) { return Complex{-1.0, 0.0}; }});
  }
  return be;
}

Circuit phase_oracle_on(const std::vector<int>& qubits, int width) {
  Circuit c(width);
  const int m = static_cast<int>(qubits.size());
  for (int k = 0; k < m; ++k) {
    const Complex r = std::polar(1.0, 2.0 * std::numbers::pi * std::ldexp(1.0, k - m));
    c.append(DiagonalGate{"R_" + std::to_string(k), {qubits[static_cast<std::size_t>(k)]},
                          [r](std::uint64_t x) { return x ? r : Complex{1.0, 0.0}; }});
  }
  return c;
}

Circuit build_phase_oracle(int m) {
  std::vector<int> qubits;
  for (int k = 0; k < m; ++k) qubits.push_back(k);
  return phase_oracle_on(qubits, m);
}

Circuit type_projector_stage(const DisorderedModel& model, const EncodingLayout& layout,
                             int flag) {
  if (!model.doubled()) throw ContractViolation("type projector needs the binary alloy");
  const int n = model.lattice().site_bits();
  const std::uint64_t num_sites = model.num_sites();
  auto table = std::make_shared<std::vector<std::uint64_t>>(num_sites);
  for (std::uint64_t i = 0; i < num_sites; ++i) {
    (*table)[i] = keyed_random(model.disorder().randomness, i, n, n);
  }
  const double threshold =
      model.disorder().alloy_probability * static_cast<double>(num_sites);

  auto keyed = [table, n](std::uint64_t x) {
    return x ^ ((*table)[x & mask(n)] << n);
  };
  auto compare = [n, threshold](std::uint64_t x) {
    const std::uint64_t f = x & mask(n);
    return static_cast<double>(f) < threshold ? x ^ (std::uint64_t{1} << n) : x;
  };
  // local bits: comparator, type, flag
  auto mark = [](std::uint64_t x) {
    const std::uint64_t differs = (x ^ (x >> 1)) & 1U;
    return x ^ (differs << 2);
  };
  const std::vector<int> fk = concat({layout.site, layout.keyed});
  const std::vector<int> cmp = concat({layout.keyed, {layout.comparator}});
  Circuit c(layout.total_qubits);
  c.append(PermutationGate{"F_k", fk, keyed, keyed});
  c.append(PermutationGate{"C_p", cmp, compare, compare});
  c.append(PermutationGate{"mark", {layout.comparator, layout.type, flag}, mark, mark});
  c.append(PermutationGate{"C_p^dag", cmp, compare, compare});
  c.append(PermutationGate{"F_k^dag", fk, keyed, keyed});
  return c;
}

BlockEncoding build_type_projector(const DisorderedModel& model) {
  EncodingLayout layout;
  int q = 0;
  layout.type = q++;
  layout.site = range(q, model.lattice().site_bits());
  layout.system_qubits = q;
  layout.keyed = range(q, model.lattice().site_bits());
  layout.comparator = q++;
  layout.projector_in = q++;
  layout.total_qubits = q;
  BlockEncoding be;
  be.name = "P^A";
  be.system_qubits = layout.system_qubits;
  be.ancilla_qubits = q - layout.system_qubits;
  be.alpha = 1.0;
  be.circuit = type_projector_stage(model, layout, layout.projector_in);
  return be;
}

}  // namespace disqla
