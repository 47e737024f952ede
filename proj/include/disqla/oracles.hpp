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

#ifndef DISQLA_ORACLES_HPP
#define DISQLA_ORACLES_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "disqla/block_encoding.hpp"
#include "disqla/circuit.hpp"
#include "disqla/hopping.hpp"

namespace disqla {

/// Tabulated sparse-access data of one disorder realization, indexed by
/// l * N + j.
struct SparseAccessOracles {
  std::uint64_t num_sites = 0;
  int sparsity = 0;
  int site_bits = 0;
  int slot_bits = 0;
  int precision_bits = 0;
  std::vector<int> reverse;
  std::vector<std::uint64_t> column;
  std::vector<std::uint8_t> padded;
  std::vector<std::uint64_t> distance;
  std::vector<std::uint64_t> phase;

  std::uint64_t column_index(int l, std::uint64_t j) const;
  bool is_padded(int l, std::uint64_t j) const;
  std::uint64_t distance_bits(int l, std::uint64_t j) const;
  std::uint64_t phase_bits(int l, std::uint64_t j) const;
};

SparseAccessOracles make_oracles(const DisorderedModel& model);

/// Qubit assignment of the full encoding.  Registers are listed
/// least-significant qubit first; absent registers are empty or -1.
///
///   system   : [type] site          (type only for the alloy)
///   ancillas : slot, selector, d~, phi~, dilation flags, pad flag,
///              then the P^A workspace f, comparator, two projector flags
struct EncodingLayout {
  int type = -1;
  std::vector<int> site;
  std::vector<int> slot;
  int selector = -1;
  std::vector<int> distance;
  std::vector<int> phase;
  std::vector<int> flags;
  int pad = -1;
  std::vector<int> keyed;
  int comparator = -1;
  int projector_in = -1;
  int projector_out = -1;
  int system_qubits = 0;
  int total_qubits = 0;
};

EncodingLayout make_layout(const DisorderedModel& model);

/// O_c in involutive form: (l, j) -> (reverse(l), c(j, l)) on valid
/// slots, fixed point on padded slots.  For the alloy the slot-type
/// selector is swapped with the system type bit.
Gate column_index_gate(std::shared_ptr<const SparseAccessOracles> oracles,
                       const EncodingLayout& layout);

/// O_d: d~ register ^= d~(j, l).
Gate distance_gate(std::shared_ptr<const SparseAccessOracles> oracles,
                   const EncodingLayout& layout);

/// O_phi: phi~ register ^= phi~(j, l).
Gate phase_bits_gate(std::shared_ptr<const SparseAccessOracles> oracles,
                     const EncodingLayout& layout);

/// Pad flag ^= [slot invalid or padded].
Gate pad_gate(std::shared_ptr<const SparseAccessOracles> oracles, const EncodingLayout& layout);

/// Amplitude stage O_e for every type pair: the success amplitude on the
/// dilation flags is (t_ab / t_max) exp(-gamma~_ab d~).
Circuit amplitude_stage(const DisorderedModel& model, const EncodingLayout& layout);

/// Block-encoding of diag(t exp(-gamma~ d~)) over an m-qubit d~ register,
/// alpha = max(1, |t|), with m dilation flags.
BlockEncoding build_amplitude_oracle(double gamma_tilde, double t, int m);

/// O_p = prod_k R_k with R_k = diag(1, exp(i 2 pi 2^k / M)) on `qubits`.
Circuit build_phase_oracle(int m);
Circuit phase_oracle_on(const std::vector<int>& qubits, int width);

/// P^A as a block-encoding on (type, site) with an explicitly uncomputed
/// keyed-function register.
BlockEncoding build_type_projector(const DisorderedModel& model);

/// U_P acting inside the full layout, writing into `flag`.
Circuit type_projector_stage(const DisorderedModel& model, const EncodingLayout& layout,
                             int flag);

}  // namespace disqla

#endif
