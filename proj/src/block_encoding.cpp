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

#include "disqla/block_encoding.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>

#include "disqla/errors.hpp"
#include "disqla/oracles.hpp"

namespace disqla {

namespace {

Complex overlap(const SparseState& a, const SparseState& b) {
  Complex sum{};
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->index < ib->index) {
      ++ia;
    } else if (ib->index < ia->index) {
      ++ib;
    } else {
      sum += std::conj(ia->value) * ib->value;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

Matrix hadamard() {
  Matrix h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  return h;
}

}  // namespace

BlockEncoding identity_encoding(int system_qubits) {
  BlockEncoding be;
  be.name = "identity";
  be.circuit = Circuit(system_qubits);
  be.system_qubits = system_qubits;
  be.ancilla_qubits = 0;
  be.alpha = 1.0;
  be.queries = 0;
  return be;
}

Matrix extract_block(const BlockEncoding& be) {
  const auto dim = static_cast<Eigen::Index>(be.system_dimension());
  Matrix block = Matrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (const Amplitude& a : be.circuit.apply_basis(static_cast<BasisIndex>(j))) {
      if (a.index < static_cast<BasisIndex>(dim)) {
        block(static_cast<Eigen::Index>(a.index), j) = be.alpha * a.value;
      }
    }
  }
  return block;
}

Complex block_element(const BlockEncoding& be, std::uint64_t i, std::uint64_t j) {
  if (i >= be.system_dimension() || j >= be.system_dimension()) {
    throw DomainError("block_element: index outside the system register");
  }
  for (const Amplitude& a : be.circuit.apply_basis(j)) {
    if (a.index == i) return be.alpha * a.value;
  }
  return {};
}

BlockEncoding multiply(const BlockEncoding& a, const BlockEncoding& b) {
  if (a.system_qubits != b.system_qubits) {
    throw ContractViolation("multiply: system registers differ");
  }
  const int width = a.system_qubits + a.ancilla_qubits + b.ancilla_qubits;
  std::vector<int> map_b(static_cast<std::size_t>(b.total_qubits()));
  for (int q = 0; q < b.total_qubits(); ++q) {
    map_b[static_cast<std::size_t>(q)] = q < b.system_qubits ? q : q + a.ancilla_qubits;
  }
  std::vector<int> map_a(static_cast<std::size_t>(a.total_qubits()));
  for (int q = 0; q < a.total_qubits(); ++q) map_a[static_cast<std::size_t>(q)] = q;
  BlockEncoding out;
  out.name = a.name + "*" + b.name;
  out.circuit = Circuit(width);
  out.circuit.append(b.circuit.remapped(map_b, width));
  out.circuit.append(a.circuit.remapped(map_a, width));
  out.system_qubits = a.system_qubits;
  out.ancilla_qubits = a.ancilla_qubits + b.ancilla_qubits;
  out.alpha = a.alpha * b.alpha;
  out.queries = a.queries + b.queries;
  return out;
}

BlockEncoding adjoint(const BlockEncoding& be) {
  BlockEncoding out = be;
  out.name = be.name + "^dag";
  out.circuit = be.circuit.adjoint();
  return out;
}

double UnitarityReport::worst() const {
  return std::max({gate_defect, sampled_gram_defect, dense_defect});
}

UnitarityReport check_unitarity(const BlockEncoding& be, int dense_cap, int extra_columns) {
  UnitarityReport report;
  report.gate_defect = be.circuit.unitarity_defect();

  std::vector<BasisIndex> columns;
  for (std::uint64_t j = 0; j < be.system_dimension(); ++j) columns.push_back(j);
  std::mt19937_64 rng(0xC0FFEE);
  const int width = be.total_qubits();
  const BasisIndex mask = width >= 64 ? ~BasisIndex{0} : (BasisIndex{1} << width) - 1;
  for (int k = 0; k < extra_columns; ++k) columns.push_back(rng() & mask);
  std::sort(columns.begin(), columns.end());
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());

  std::vector<SparseState> images;
  images.reserve(columns.size());
  for (BasisIndex c : columns) images.push_back(be.circuit.apply_basis(c));
  double worst = 0.0;
  for (std::size_t p = 0; p < images.size(); ++p) {
    for (std::size_t q = p; q < images.size(); ++q) {
      const Complex g = overlap(images[p], images[q]);
      const Complex expected = p == q ? Complex{1.0, 0.0} : Complex{};
      worst = std::max(worst, std::abs(g - expected));
    }
  }
  report.sampled_gram_defect = worst;
  report.sampled_columns = static_cast<int>(columns.size());

  if (width <= dense_cap) {
    const Matrix u = be.circuit.dense(dense_cap);
    report.dense_defect = operator_norm_distance(u.adjoint() * u, Matrix::Identity(u.rows(), u.cols()));
  }
  return report;
}

BlockEncoding assemble_full_encoding(const DisorderedModel& model) {
  const EncodingLayout layout = make_layout(model);
  auto oracles = std::make_shared<const SparseAccessOracles>(make_oracles(model));
  const bool magnetic = model.disorder().kind == DisorderKind::magnetic;
  const int total = layout.total_qubits;

  Circuit hop(total);
  Matrix prep;
  if (!layout.slot.empty()) {
    prep = uniform_preparation(static_cast<int>(layout.slot.size()),
                               static_cast<std::uint64_t>(model.sparsity()));
    hop.append(DenseGate{"prep", layout.slot, prep});
  }
  if (model.doubled()) hop.append(DenseGate{"H", {layout.selector}, hadamard()});
  hop.append(distance_gate(oracles, layout));
  if (magnetic) hop.append(phase_bits_gate(oracles, layout));
  hop.append(amplitude_stage(model, layout));
  if (magnetic) {
    hop.append(phase_oracle_on(layout.phase, total));
    hop.append(phase_bits_gate(oracles, layout));
  }
  hop.append(distance_gate(oracles, layout));
  hop.append(pad_gate(oracles, layout));
  hop.append(column_index_gate(oracles, layout));
  if (model.doubled()) hop.append(DenseGate{"H", {layout.selector}, hadamard()});
  if (!layout.slot.empty()) hop.append(DenseGate{"prep^dag", layout.slot, prep.adjoint()});

  BlockEncoding be;
  be.system_qubits = layout.system_qubits;
  be.ancilla_qubits = total - layout.system_qubits;
  be.alpha = model.alpha();
  be.queries = 1;
  if (model.doubled()) {
    be.name = "P^A h~ P^A";
    be.circuit = Circuit(total);
    be.circuit.append(type_projector_stage(model, layout, layout.projector_in));
    be.circuit.append(hop);
    be.circuit.append(type_projector_stage(model, layout, layout.projector_out));
  } else {
    be.name = "h";
    be.circuit = std::move(hop);
  }
  return be;
}

BlockEncoding assemble_full_encoding(const LatticeSpec& lattice, const DisorderSpec& disorder,
                                     int qubit_cap) {
  const DisorderedModel model(lattice, disorder);
  const EncodingLayout layout = make_layout(model);
  if (layout.total_qubits > qubit_cap) {
    throw SizeError("encoding needs " + std::to_string(layout.total_qubits) +
                    " qubits, above the cap of " + std::to_string(qubit_cap));
  }
  return assemble_full_encoding(model);
}

double verify_plus_projection(const DisorderedModel& model, int degree) {
  if (degree < 0) throw DomainError("degree must be non-negative");
  if (!model.doubled()) throw ContractViolation("projection identity needs the binary alloy");
  const std::uint64_t n = model.num_sites();
  if (n > 4096) throw SizeError("projection check is dense; N above 4096");
  const double alpha = model.alpha();
  const Matrix h = assemble_hopping_matrix(model).dense() / alpha;
  const Matrix ht = encoded_target(model).dense() / alpha;
  const auto dim = static_cast<Eigen::Index>(n);
  Matrix projector = Matrix::Zero(2 * dim, 2 * dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Eigen::Index a = model.atom_type(static_cast<std::uint64_t>(i));
    projector(2 * i + a, 2 * i + a) = 1.0;
  }
  Matrix lhs = Matrix::Identity(dim, dim);
  Matrix power = projector;
  for (int k = 0; k < degree; ++k) {
    lhs = lhs * h;
    power = power * ht;
  }
  Matrix plus = Matrix::Zero(2 * dim, dim);
  const double r = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < dim; ++i) {
    plus(2 * i, i) = r;
    plus(2 * i + 1, i) = r;
  }
  const Matrix rhs = 2.0 * plus.adjoint() * power * plus;
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

void export_encoding(std::ostream& out, const BlockEncoding& be, int dense_cap) {
  if (be.total_qubits() > dense_cap) {
    throw SizeError("export writes every column; " + std::to_string(be.total_qubits()) +
                    " qubits exceed the cap of " + std::to_string(dense_cap));
  }
  out << std::setprecision(17);
  out << "# name=" << be.name << " dimension=" << be.system_dimension()
      << " alpha=" << be.alpha << " ancillas=" << be.ancilla_qubits << '\n';
  const BasisIndex columns = BasisIndex{1} << be.total_qubits();
  for (BasisIndex c = 0; c < columns; ++c) {
    for (const Amplitude& a : be.circuit.apply_basis(c)) {
      out << a.index << ' ' << c << ' ' << a.value.real() << ' ' << a.value.imag() << '\n';
    }
  }
}

}  // namespace disqla
