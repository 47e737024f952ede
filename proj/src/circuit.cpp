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

#include "disqla/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/SVD>

#include "disqla/errors.hpp"

namespace disqla {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::uint64_t gather(BasisIndex x, const std::vector<int>& support) {
  std::uint64_t local = 0;
  for (std::size_t k = 0; k < support.size(); ++k) {
    local |= ((x >> support[k]) & 1U) << k;
  }
  return local;
}

BasisIndex scatter(BasisIndex x, const std::vector<int>& support, std::uint64_t local) {
  for (std::size_t k = 0; k < support.size(); ++k) {
    const BasisIndex bit = BasisIndex{1} << support[k];
    x = ((local >> k) & 1U) ? (x | bit) : (x & ~bit);
  }
  return x;
}

constexpr int kExhaustiveBits = 22;

}  // namespace

std::vector<int> gate_support(const Gate& gate) {
  return std::visit(
      Overloaded{[](const PermutationGate& g) { return g.support; },
                 [](const DiagonalGate& g) { return g.support; },
                 [](const MultiplexedGate& g) {
                   std::vector<int> s = g.controls;
                   s.push_back(g.target);
                   return s;
                 },
                 [](const DenseGate& g) { return g.support; }},
      gate);
}

const std::string& gate_name(const Gate& gate) {
  return std::visit([](const auto& g) -> const std::string& { return g.name; }, gate);
}

Gate gate_adjoint(const Gate& gate) {
  return std::visit(
      Overloaded{
          [](const PermutationGate& g) -> Gate {
            return PermutationGate{g.name + "^dag", g.support, g.backward, g.forward};
          },
          [](const DiagonalGate& g) -> Gate {
            auto phase = g.phase;
            return DiagonalGate{g.name + "^dag", g.support,
                                [phase](std::uint64_t x) { return std::conj(phase(x)); }};
          },
          [](const MultiplexedGate& g) -> Gate {
            MultiplexedGate out = g;
            out.name += "^dag";
            for (auto& u : out.table) u = u.adjoint().eval();
            return out;
          },
          [](const DenseGate& g) -> Gate {
            return DenseGate{g.name + "^dag", g.support, g.matrix.adjoint()};
          }},
      gate);
}

Gate gate_remapped(const Gate& gate, const std::vector<int>& qubit_map) {
  auto remap = [&qubit_map](std::vector<int> s) {
    for (int& q : s) q = qubit_map.at(static_cast<std::size_t>(q));
    return s;
  };
  return std::visit(
      Overloaded{[&](PermutationGate g) -> Gate {
                   g.support = remap(g.support);
                   return g;
                 },
                 [&](DiagonalGate g) -> Gate {
                   g.support = remap(g.support);
                   return g;
                 },
                 [&](MultiplexedGate g) -> Gate {
                   g.controls = remap(g.controls);
                   g.target = qubit_map.at(static_cast<std::size_t>(g.target));
                   return g;
                 },
                 [&](DenseGate g) -> Gate {
                   g.support = remap(g.support);
                   return g;
                 }},
      gate);
}

void normalize(SparseState& state) {
  std::sort(state.begin(), state.end(),
            [](const Amplitude& a, const Amplitude& b) { return a.index < b.index; });
  SparseState merged;
  merged.reserve(state.size());
  for (const Amplitude& a : state) {
    if (!merged.empty() && merged.back().index == a.index) {
      merged.back().value += a.value;
    } else {
      merged.push_back(a);
    }
  }
  std::erase_if(merged, [](const Amplitude& a) { return a.value == Complex{}; });
  state = std::move(merged);
}

SparseState apply_gate(const Gate& gate, const SparseState& state) {
  SparseState out;
  out.reserve(state.size() * 2);
  std::visit(
      Overloaded{
          [&](const PermutationGate& g) {
            for (const Amplitude& a : state) {
              const std::uint64_t local = gather(a.index, g.support);
              out.push_back({scatter(a.index, g.support, g.forward(local)), a.value});
            }
          },
          [&](const DiagonalGate& g) {
            for (const Amplitude& a : state) {
              out.push_back({a.index, a.value * g.phase(gather(a.index, g.support))});
            }
          },
          [&](const MultiplexedGate& g) {
            const BasisIndex bit = BasisIndex{1} << g.target;
            for (const Amplitude& a : state) {
              const auto& u = g.table[gather(a.index, g.controls)];
              const int b = (a.index & bit) ? 1 : 0;
              const Complex low = u(0, b) * a.value;
              const Complex high = u(1, b) * a.value;
              if (low != Complex{}) out.push_back({a.index & ~bit, low});
              if (high != Complex{}) out.push_back({a.index | bit, high});
            }
          },
          [&](const DenseGate& g) {
            const Eigen::Index dim = g.matrix.rows();
            for (const Amplitude& a : state) {
              const auto col = static_cast<Eigen::Index>(gather(a.index, g.support));
              for (Eigen::Index r = 0; r < dim; ++r) {
                const Complex v = g.matrix(r, col) * a.value;
                if (v != Complex{}) {
                  out.push_back(
                      {scatter(a.index, g.support, static_cast<std::uint64_t>(r)), v});
                }
              }
            }
          }},
      gate);
  normalize(out);
  return out;
}

double gate_unitarity_defect(const Gate& gate) {
  constexpr double kBroken = std::numeric_limits<double>::infinity();
  return std::visit(
      Overloaded{
          [&](const PermutationGate& g) -> double {
            const std::size_t k = g.support.size();
            if (k <= kExhaustiveBits) {
              const std::uint64_t dim = std::uint64_t{1} << k;
              std::vector<bool> seen(dim, false);
              for (std::uint64_t x = 0; x < dim; ++x) {
                const std::uint64_t y = g.forward(x);
                if (y >= dim || seen[y] || g.backward(y) != x) return kBroken;
                seen[y] = true;
              }
              return 0.0;
            }
            std::mt19937_64 rng(0x5eed);
            const std::uint64_t mask = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
            for (int trial = 0; trial < (1 << 20); ++trial) {
              const std::uint64_t x = rng() & mask;
              if (g.backward(g.forward(x)) != x) return kBroken;
            }
            return 0.0;
          },
          [&](const DiagonalGate& g) -> double {
            const std::size_t k = g.support.size();
            if (k > kExhaustiveBits) throw SizeError("diagonal gate support too wide to check");
            double worst = 0.0;
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
              worst = std::max(worst, std::abs(std::abs(g.phase(x)) - 1.0));
            }
            return worst;
          },
          [&](const MultiplexedGate& g) -> double {
            if (g.table.size() != (std::size_t{1} << g.controls.size())) return kBroken;
            double worst = 0.0;
            for (const auto& u : g.table) {
              const Eigen::Matrix2cd d = u.adjoint() * u - Eigen::Matrix2cd::Identity();
              worst = std::max(worst, operator_norm_distance(d, Matrix::Zero(2, 2)));
            }
            return worst;
          },
          [&](const DenseGate& g) -> double {
            const Eigen::Index dim = Eigen::Index{1} << g.support.size();
            if (g.matrix.rows() != dim || g.matrix.cols() != dim) return kBroken;
            return operator_norm_distance(g.matrix.adjoint() * g.matrix,
                                          Matrix::Identity(dim, dim));
          }},
      gate);
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0 || num_qubits > 64) throw SizeError("circuits hold at most 64 qubits");
}

void Circuit::append(Gate gate) {
  for (int q : gate_support(gate)) {
    if (q < 0 || q >= num_qubits_) {
      throw ContractViolation("gate '" + gate_name(gate) + "' touches qubit " +
                              std::to_string(q) + " outside the circuit");
    }
  }
  gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits_ > num_qubits_) {
    throw ContractViolation("appended circuit is wider than the target");
  }
  for (const Gate& g : other.gates_) append(g);
}

SparseState Circuit::apply(SparseState state) const {
  normalize(state);
  for (const Gate& g : gates_) state = apply_gate(g, state);
  return state;
}

SparseState Circuit::apply_basis(BasisIndex index) const {
  return apply(SparseState{{index, Complex{1.0, 0.0}}});
}

Circuit Circuit::adjoint() const {
  Circuit out(num_qubits_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.gates_.push_back(gate_adjoint(*it));
  return out;
}

Circuit Circuit::remapped(const std::vector<int>& qubit_map, int width) const {
  if (static_cast<int>(qubit_map.size()) < num_qubits_) {
    throw ContractViolation("qubit map does not cover the circuit");
  }
  Circuit out(width);
  for (const Gate& g : gates_) out.append(gate_remapped(g, qubit_map));
  return out;
}

Matrix Circuit::dense(int max_qubits) const {
  if (num_qubits_ > max_qubits) {
    throw SizeError("dense materialization of " + std::to_string(num_qubits_) +
                    " qubits exceeds the cap of " + std::to_string(max_qubits));
  }
  const Eigen::Index dim = Eigen::Index{1} << num_qubits_;
  Matrix u = Matrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    for (const Amplitude& a : apply_basis(static_cast<BasisIndex>(col))) {
      u(static_cast<Eigen::Index>(a.index), col) = a.value;
    }
  }
  return u;
}

double Circuit::unitarity_defect() const {
  double total = 0.0;
  for (const Gate& g : gates_) total += gate_unitarity_defect(g);
  return total;
}

Matrix uniform_preparation(int width, std::uint64_t count) {
  const Eigen::Index dim = Eigen::Index{1} << width;
  if (count < 1 || static_cast<Eigen::Index>(count) > dim) {
    throw DomainError("uniform_preparation: count must lie in [1, 2^width]");
  }
  Matrix u = Matrix::Identity(dim, dim);
  if (count == 1) return u;
  Eigen::VectorXcd target = Eigen::VectorXcd::Zero(dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(count));
  for (std::uint64_t l = 0; l < count; ++l) target(static_cast<Eigen::Index>(l)) = amp;
  Eigen::VectorXcd v = -target;
  v(0) += 1.0;
  u -= (2.0 / v.squaredNorm()) * v * v.adjoint();
  return u;
}

double operator_norm_distance(const Matrix& a, const Matrix& b) {
  const Matrix d = a - b;
  if (d.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(d);
  return svd.singularValues()(0);
}

}  // namespace disqla
