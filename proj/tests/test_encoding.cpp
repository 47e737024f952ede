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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "disqla/block_encoding.hpp"
#include "disqla/errors.hpp"
#include "disqla/oracles.hpp"

namespace disqla {
namespace {

LatticeSpec chain(int n, Boundary b = Boundary::open) {
  LatticeSpec l;
  l.dimension = 1;
  l.extents = {n};
  l.boundary = b;
  return l;
}

LatticeSpec square(int n, Boundary b = Boundary::periodic) {
  LatticeSpec l;
  l.dimension = 2;
  l.extents = {n, n};
  l.boundary = b;
  return l;
}

DisorderSpec spec(DisorderKind kind, std::uint64_t key) {
  DisorderSpec d;
  d.kind = kind;
  d.randomness.key = key;
  d.precision_bits = 4;
  d.hopping = kind == DisorderKind::binary_alloy ? PairTable{{{-1.0, 0.5}, {0.5, 2.0}}}
                                                 : PairTable{{{-1.3, -1.3}, {-1.3, -1.3}}};
  d.decay = {{{0.3, 0.2}, {0.2, 0.1}}};
  d.displacement_width = kind == DisorderKind::structural ? 0.2 : 0.0;
  return d;
}

double block_deviation(const DisorderedModel& m) {
  const BlockEncoding be = assemble_full_encoding(m);
  const Matrix block = extract_block(be);
  const Matrix target = encoded_target(m).dense();
  return (block - target).cwiseAbs().maxCoeff();
}

TEST(Circuit, UniformPreparationFirstColumn) {
  const Matrix u = uniform_preparation(2, 3);
  EXPECT_LE((u.adjoint() * u - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-14);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(std::abs(u(k, 0) - 1.0 / std::sqrt(3.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(u(3, 0)), 0.0, 1e-14);
}

TEST(Circuit, AdjointInvertsMixedGates) {
  Circuit c(3);
  c.append(PermutationGate{"inc", {0, 1}, [](std::uint64_t x) { return (x + 1) & 3; },
                           [](std::uint64_t x) { return (x + 3) & 3; }});
  c.append(DiagonalGate{"ph", {1, 2}, [](std::uint64_t x) { return std::polar(1.0, 0.3 * x); }});
  MultiplexedGate mg{"ry", 2, {0}, {}};
  mg.table.push_back(Eigen::Matrix2cd::Identity());
  Eigen::Matrix2cd r;
  r << std::cos(0.4), -std::sin(0.4), std::sin(0.4), std::cos(0.4);
  mg.table.push_back(r);
  c.append(mg);
  c.append(DenseGate{"prep", {0, 2}, uniform_preparation(2, 3)});
  const Matrix u = c.dense();
  const Matrix v = c.adjoint().dense();
  EXPECT_LE((v * u - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LE(c.unitarity_defect(), 1e-14);
}

TEST(Circuit, RejectsNonBijectivePermutation) {
  const Gate g = PermutationGate{"bad", {0, 1}, [](std::uint64_t) { return std::uint64_t{0}; },
                                 [](std::uint64_t) { return std::uint64_t{0}; }};
  EXPECT_GT(gate_unitarity_defect(g), 1.0);
}

TEST(Oracles, ColumnIndexOnChain) {
  const DisorderedModel m(chain(4), spec(DisorderKind::none, 0));
  const SparseAccessOracles o = make_oracles(m);
  EXPECT_EQ(o.column_index(0, 1), 1u);
  EXPECT_EQ(o.column_index(1, 1), 0u);
  EXPECT_EQ(o.column_index(2, 1), 2u);
  EXPECT_EQ(o.column_index(1, 0), 0u);
  EXPECT_TRUE(o.is_padded(1, 0));
}

TEST(Oracles, ColumnIndexGateIsPermutation) {
  const DisorderedModel m(chain(4), spec(DisorderKind::none, 0));
  const EncodingLayout layout = make_layout(m);
  auto o = std::make_shared<const SparseAccessOracles>(make_oracles(m));
  Circuit c(layout.total_qubits);
  c.append(column_index_gate(o, layout));
  EXPECT_EQ(c.unitarity_defect(), 0.0);
  // Exactly one unit entry per column, on every basis state.
  for (BasisIndex col = 0; col < (BasisIndex{1} << layout.total_qubits); col += 7) {
    const SparseState s = c.apply_basis(col);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].value, Complex(1.0, 0.0));
  }
}

TEST(Oracles, DistanceQuantization) {
  DisorderSpec d = spec(DisorderKind::none, 0);
  d.precision_bits = 4;
  d.max_distance = 4.0;
  const DisorderedModel m(chain(8), d);
  const SparseAccessOracles o = make_oracles(m);
  EXPECT_EQ(o.distance_bits(0, 3), 0u);
  EXPECT_EQ(o.distance_bits(1, 3), 4u);
  EXPECT_EQ(o.distance_bits(2, 3), 4u);
  for (std::uint64_t j = 0; j < 8; ++j) {
    for (int l = 0; l < 3; ++l) EXPECT_EQ(o.phase_bits(l, j), 0u);
  }
}

TEST(Oracles, AmplitudeOracleValues) {
  const double t = 0.8;
  for (auto [gamma, m] : {std::pair{0.1, 3}, std::pair{0.25, 4}}) {
    const BlockEncoding be = build_amplitude_oracle(gamma, t, m);
    const Matrix b = extract_block(be);
    const int top = (1 << m) - 1;
    EXPECT_NEAR(std::abs(b(0, 0) - t), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(b(top, top) - t * std::exp(-gamma * top)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(b(5, 5) - t * std::exp(-gamma * 5)), 0.0, 1e-12);
    EXPECT_LE(check_unitarity(be).worst(), 1e-12);
  }
  EXPECT_THROW(build_amplitude_oracle(-0.1, 1.0, 3), DomainError);
}

TEST(Oracles, PhaseOracleDiagonal) {
  const int m = 4;
  const Matrix u = build_phase_oracle(m).dense();
  const double two_pi = 2.0 * std::numbers::pi;
  EXPECT_NEAR(std::abs(u(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(8, 8) + 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(u(5, 5) - std::polar(1.0, two_pi * 5 / 16)), 0.0, 1e-14);
  for (int k = 0; k < 16; ++k) {
    EXPECT_NEAR(std::abs(u(k, k) - std::polar(1.0, two_pi * k / 16)), 0.0, 1e-14);
  }
  EXPECT_LE((u - Matrix(u.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Oracles, TypeProjector) {
  DisorderSpec d = spec(DisorderKind::binary_alloy, 7);
  d.alloy_probability = 0.5;
  const DisorderedModel m(chain(8), d);
  const BlockEncoding be = build_type_projector(m);
  const Matrix p = extract_block(be);
  EXPECT_NEAR(p.trace().real(), 8.0, 1e-12);
  for (std::uint64_t i = 0; i < 8; ++i) {
    const int a = sample_atom_type(m.disorder(), m.lattice(), i);
    const auto k = static_cast<Eigen::Index>(2 * i);
    EXPECT_NEAR(p(k + a, k + a).real(), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(p(k + 1 - a, k + 1 - a)), 0.0, 1e-12);
  }
  EXPECT_LE((p - Matrix(p.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE(check_unitarity(be).worst(), 1e-12);

  d.alloy_probability = 1.0;
  const Matrix all = extract_block(build_type_projector(DisorderedModel(chain(8), d)));
  for (Eigen::Index i = 0; i < 8; ++i) EXPECT_NEAR(all(2 * i + 1, 2 * i + 1).real(), 1.0, 1e-12);
}

TEST(BlockEncoding, IdentityAndAdjoint) {
  const BlockEncoding id = identity_encoding(3);
  EXPECT_LE((extract_block(id) - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 0.0);
  const DisorderedModel m(chain(8, Boundary::periodic), spec(DisorderKind::magnetic, 3));
  const BlockEncoding be = assemble_full_encoding(m);
  const Matrix a = extract_block(be);
  const Matrix b = extract_block(adjoint(be));
  EXPECT_LE((b - a.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(BlockEncoding, CleanChainMatchesClassicalAssembly) {
  const DisorderedModel m(chain(4), spec(DisorderKind::none, 0));
  EXPECT_LE(block_deviation(m), 1e-10);
}

TEST(BlockEncoding, ZeroHoppingGivesZeroBlock) {
  DisorderSpec d = spec(DisorderKind::none, 0);
  d.hopping = {{{0.0, 0.0}, {0.0, 0.0}}};
  const BlockEncoding be = assemble_full_encoding(DisorderedModel(chain(8), d));
  EXPECT_LE(extract_block(be).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(BlockEncoding, AlloyChainMatchesAndIsHermitian) {
  const DisorderedModel m(chain(8), spec(DisorderKind::binary_alloy, 42));
  const Matrix block = extract_block(assemble_full_encoding(m));
  EXPECT_LE((block - block.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE(block_deviation(m), 1e-10);
}

TEST(BlockEncoding, AllKindsAndBoundaries) {
  for (DisorderKind kind : {DisorderKind::none, DisorderKind::binary_alloy,
                            DisorderKind::structural, DisorderKind::magnetic}) {
    for (Boundary b : {Boundary::open, Boundary::periodic}) {
      for (const LatticeSpec& l : {chain(16, b), square(4, b)}) {
        const DisorderedModel m(l, spec(kind, 42));
        const BlockEncoding be = assemble_full_encoding(m);
        EXPECT_LE(block_deviation(m), 1e-10);
        EXPECT_LE(check_unitarity(be).worst(), 1e-12);
        EXPECT_DOUBLE_EQ(be.alpha, m.alpha());
      }
    }
  }
}

TEST(BlockEncoding, DenseUnitarityOnSmallestEncoding) {
  LatticeSpec l = chain(2, Boundary::open);
  DisorderSpec d = spec(DisorderKind::none, 0);
  d.precision_bits = 1;
  const BlockEncoding be = assemble_full_encoding(DisorderedModel(l, d));
  const UnitarityReport r = check_unitarity(be, 12);
  ASSERT_GE(r.dense_defect, 0.0);
  EXPECT_LE(r.dense_defect, 1e-12);
}

TEST(BlockEncoding, QubitCap) {
  EXPECT_THROW(assemble_full_encoding(square(4), spec(DisorderKind::binary_alloy, 1), 10), SizeError);
}

TEST(BlockEncoding, ProductOfEncodings) {
  const DisorderedModel m(chain(8, Boundary::periodic), spec(DisorderKind::magnetic, 5));
  const BlockEncoding be = assemble_full_encoding(m);
  const BlockEncoding sq = multiply(be, adjoint(be));
  const Matrix h = encoded_target(m).dense();
  EXPECT_LE((extract_block(sq) - h * h.adjoint()).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_DOUBLE_EQ(sq.alpha, be.alpha * be.alpha);
  EXPECT_EQ(sq.ancilla_qubits, 2 * be.ancilla_qubits);
}

TEST(BlockEncoding, PlusProjection) {
  const DisorderedModel m(chain(8), spec(DisorderKind::binary_alloy, 42));
  EXPECT_LE(verify_plus_projection(m, 0), 1e-15);
  EXPECT_LE(verify_plus_projection(m, 1), 1e-12);
  EXPECT_LE(verify_plus_projection(m, 5), 1e-10);
  for (int d = 0; d <= 8; ++d) EXPECT_LE(verify_plus_projection(m, d), 1e-10) << d;
  EXPECT_THROW(verify_plus_projection(DisorderedModel(chain(8), spec(DisorderKind::none, 0)), 1),
               ContractViolation);
}

TEST(BlockEncoding, ExportRoundTrip) {
  LatticeSpec l = chain(2);
  DisorderSpec d = spec(DisorderKind::none, 0);
  d.precision_bits = 1;
  const BlockEncoding be = assemble_full_encoding(DisorderedModel(l, d));
  std::ostringstream out;
  export_encoding(out, be, 12);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  EXPECT_NE(header.find("alpha="), std::string::npos);
  const Matrix u = be.circuit.dense(12);
  std::uint64_t r, c;
  double re, im;
  Matrix back = Matrix::Zero(u.rows(), u.cols());
  while (in >> r >> c >> re >> im) back(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {re, im};
  EXPECT_LE((back - u).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(export_encoding(out, assemble_full_encoding(DisorderedModel(chain(64), d)), 10), SizeError);
}

}  // namespace
}  // namespace disqla
