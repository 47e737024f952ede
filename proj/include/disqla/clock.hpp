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

#ifndef DISQLA_CLOCK_HPP
#define DISQLA_CLOCK_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "disqla/chebyshev.hpp"

namespace disqla {

/// One- or two-qubit gate.  For two wires (a, b) the local basis index is
/// 2 bit_a + bit_b.
struct LocalGate {
  std::string name;
  std::vector<int> wires;
  Matrix unitary;
};

/// Circuit C = U_T ... U_1 on r qubits with input string x on the first n
/// qubits.  Qubit 0 is the most significant bit of the work index and is
/// the output qubit.
struct GateCircuit {
  int qubits = 1;
  std::vector<int> input;
  std::vector<LocalGate> gates;

  int depth() const { return static_cast<int>(gates.size()); }
  /// x 2^{r-n}: the work-register index of |x>|0>^{r-n}.
  std::uint64_t input_index() const;
  /// Checks wires, gate sizes and unitarity to 1e-12.
  void validate() const;
};

/// Named gates: I X Y Z H S T (one wire), CNOT CZ SWAP (two wires).
LocalGate named_gate(const std::string& name, std::vector<int> wires);

/// Text format, one directive per line, '#' starts a comment:
///   qubits <r>
///   input <bits>            e.g. "input 101"
///   <NAME> <wires...>       named gate
///   U1 <8 reals> <w>        2x2 matrix, row-major (re, im) pairs
///   U2 <32 reals> <w0> <w1> 4x4 matrix, row-major (re, im) pairs
/// Errors raise ConfigError naming the line.
GateCircuit parse_gate_circuit(std::istream& in);
void write_gate_circuit(std::ostream& out, const GateCircuit& c);

/// Dense 2^r x 2^r matrix of one gate embedded in the full register.
Matrix embed_gate(const LocalGate& g, int qubits);
/// U_T ... U_1.
Matrix circuit_unitary(const GateCircuit& c);
/// |alpha_{x,1}|^2: probability of reading 1 on qubit 0 after C|x, 0>.
double output_probability(const GateCircuit& c);

/// (U_1, ..., U_T, Z on qubit 0, U_T^dag, ..., U_1^dag), so that the
/// ordered product equals C^dag (Z x I) C.
std::vector<LocalGate> extend_circuit(const GateCircuit& c);

struct ClockConstruction {
  int work_qubits = 0;
  int clock_qubits = 0;
  /// M = 2T + 1 active clock values; values >= M are left fixed by W.
  int period = 0;
  Matrix w;
  Matrix h;
  /// Largest number of nonzeros in a row of h, and whether every gate is
  /// 2-sparse so that the bound of 4 is promised.
  int max_row_nonzeros = 0;
  bool sparse_gate_set = false;

  std::uint64_t dimension() const { return static_cast<std::uint64_t>(w.rows()); }
  /// Index clock 2^r + work.
  std::uint64_t index(std::uint64_t clock, std::uint64_t work) const {
    return (clock << work_qubits) | work;
  }
};

/// W = sum_l |l+1><l| x V_l with |M> = |0>, h = (W + W^dag) / 2.
/// Throws SizeError when the dense matrix would exceed 2^max_qubits.
ClockConstruction clock_unitary(const std::vector<LocalGate>& v, int work_qubits,
                                int max_qubits = 14);

/// Eigenvalues of h restricted to the active clock values, ascending.
std::vector<double> active_spectrum(const ClockConstruction& cc);
/// {cos(2 pi l / M), cos(pi (2l + 1) / M) : l < M}, each 2^{r-1} times, ascending.
std::vector<double> expected_spectrum(int period, int work_qubits);

enum class Verdict { yes, no, promise_violated };
std::string to_string(Verdict v);

struct DecisionReport {
  Verdict verdict = Verdict::promise_violated;
  /// S'(omega, eta, h)_{jj}.
  double value = 0.0;
  double omega = 0.0;
  double eta = 0.0;
  double c = 0.0;
  /// g / M + eps and g / M - eps with g = 1, eps = 1 / (6M).
  double yes_threshold = 0.0;
  double no_threshold = 0.0;
  /// |value - g / M|.
  double margin = 0.0;
  std::uint64_t index = 0;
  /// |alpha_{x,1}|^2 from direct simulation of C.
  double output_probability = 0.0;
  /// S^+ and S^- evaluated on the ideal spectrum; value should equal
  /// S^+ / M + p (S^- - S^+) / M.
  double s_plus = 0.0;
  double s_minus = 0.0;
  double predicted = 0.0;
};

/// Evaluates S'_{jj} at omega = -cos(pi T / M) (even T) or +cos(pi T / M)
/// (odd T), eta = c pi / (2M), c = 1 / sqrt(4M), and compares with the
/// thresholds.
DecisionReport ldos_decision(const ClockConstruction& cc, const GateCircuit& c);
DecisionReport ldos_decision(const GateCircuit& c);

/// Random circuit of `depth` Haar-random one- and two-qubit gates on
/// `qubits` wires with a random input of `input_bits` bits.
GateCircuit random_circuit(int qubits, int depth, int input_bits, std::uint64_t seed);
Matrix haar_unitary(int dim, std::uint64_t seed);

}  // namespace disqla

#endif
