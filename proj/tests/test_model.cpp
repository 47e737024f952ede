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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "disqla/errors.hpp"
#include "disqla/hopping.hpp"
#include "disqla/keyed_random.hpp"
#include "oracles.hpp"

namespace disqla {
namespace {

LatticeSpec chain_spec(int n, Boundary b = Boundary::open) {
  LatticeSpec l;
  l.dimension = 1;
  l.extents = {n};
  l.boundary = b;
  return l;
}

TEST(Lattice, ChainPositionsFollowIndices) {
  const auto sites = enumerate_sites(chain_spec(4));
  ASSERT_EQ(sites.size(), 4u);
  for (std::uint64_t i = 0; i < 4; ++i) {
    EXPECT_EQ(sites[i].index, i);
    EXPECT_DOUBLE_EQ(sites[i].position[0], static_cast<double>(i));
  }
}

TEST(Lattice, RowMajorMapIn2D) {
  LatticeSpec l;
  l.dimension = 2;
  l.extents = {2, 2};
  const Lattice lat(l);
  const IntVec c = lat.coords(3);
  EXPECT_EQ(c[0], 1);
  EXPECT_EQ(c[1], 1);
  EXPECT_DOUBLE_EQ(lat.position(3)[0], 1.0);
  EXPECT_DOUBLE_EQ(lat.position(3)[1], 1.0);
  for (std::uint64_t i = 0; i < 4; ++i) EXPECT_EQ(lat.index(lat.coords(i)), i);
}

TEST(Lattice, CubicSparsityIsSeven) {
  LatticeSpec l;
  l.dimension = 3;
  l.extents = {2, 2, 2};
  l.boundary = Boundary::periodic;
  EXPECT_EQ(Lattice(l).sparsity(), 7);
}

TEST(Lattice, RejectsNonPowerOfTwo) {
  EXPECT_THROW(Lattice(chain_spec(6)), ConfigError);
  LatticeSpec l;
  l.dimension = 2;
  l.extents = {3, 4};
  EXPECT_THROW(Lattice{l}, ConfigError);
}

TEST(Lattice, SlotZeroIsSelfAndReverseSlotsPair) {
  LatticeSpec l;
  l.dimension = 2;
  l.extents = {4, 4};
  l.cutoff = 1.5;
  const Lattice lat(l);
  EXPECT_EQ(lat.offsets()[0], (IntVec{0, 0, 0}));
  for (int s = 0; s < lat.sparsity(); ++s) {
    const IntVec a = lat.offsets()[static_cast<std::size_t>(s)];
    const IntVec b = lat.offsets()[static_cast<std::size_t>(lat.reverse_slot(s))];
    for (int k = 0; k < 3; ++k) EXPECT_EQ(a[static_cast<std::size_t>(k)], -b[static_cast<std::size_t>(k)]);
  }
}

TEST(Lattice, OpenBoundaryPadsToSelf) {
  const Lattice lat(chain_spec(4));
  // slots: self, then the two unit offsets
  int left = -1;
  for (int s = 0; s < lat.sparsity(); ++s) {
    if (lat.offsets()[static_cast<std::size_t>(s)][0] == -1) left = s;
  }
  ASSERT_GE(left, 0);
  const SlotTarget t = lat.slot_target(0, left);
  EXPECT_TRUE(t.padded);
  EXPECT_EQ(t.site, 0u);
  EXPECT_FALSE(lat.slot_target(1, left).padded);
  EXPECT_EQ(lat.slot_target(1, left).site, 0u);
}

TEST(KeyedRandom, Deterministic) {
  RandomSource src{12345, RandomMode::keyed_hash, 2};
  EXPECT_EQ(keyed_random(src, 77, 12, 8), keyed_random(src, 77, 12, 8));
  src.mode = RandomMode::kwise_polynomial;
  src.independence = 4;
  EXPECT_EQ(keyed_random(src, 77, 12, 8), keyed_random(src, 77, 12, 8));
}

TEST(KeyedRandom, OneWiseIsTheConstantCoefficient) {
  const RandomSource src{99, RandomMode::kwise_polynomial, 1};
  const std::uint64_t expected = gf2::coefficient(99, 0, 10) >> (10 - 6);
  for (std::uint64_t x = 0; x < 64; ++x) EXPECT_EQ(keyed_random(src, x, 10, 6), expected);
}

TEST(KeyedRandom, ChiSquareUniformity) {
  const RandomSource src{2024, RandomMode::keyed_hash, 2};
  std::vector<double> counts(256, 0.0);
  const int n = 1 << 12;
  for (int x = 0; x < n; ++x) counts[keyed_random(src, static_cast<std::uint64_t>(x), 12, 8)] += 1;
  const double expected = n / 256.0;
  double chi = 0;
  for (double c : counts) chi += (c - expected) * (c - expected) / expected;
  EXPECT_GT(oracle::chi_square_p(chi, 255), 1e-3);
}

TEST(KeyedRandom, PolynomialModeIsPairwiseUniform) {
  // Over the keys, the pair of outputs at two fixed inputs is uniform.
  std::vector<double> counts(16, 0.0);
  const int keys = 4096;
  for (int k = 0; k < keys; ++k) {
    const RandomSource src{static_cast<std::uint64_t>(k) * 7919u + 1, RandomMode::kwise_polynomial, 2};
    const auto a = keyed_random(src, 3, 8, 2);
    const auto b = keyed_random(src, 200, 8, 2);
    counts[a * 4 + b] += 1;
  }
  double chi = 0;
  for (double c : counts) chi += (c - keys / 16.0) * (c - keys / 16.0) / (keys / 16.0);
  EXPECT_GT(oracle::chi_square_p(chi, 15), 1e-3);
}

TEST(KeyedRandom, FieldArithmetic) {
  for (int q : {1, 2, 5, 8, 13, 32, 64}) {
    EXPECT_TRUE(gf2::is_irreducible(gf2::modulus(q), q)) << q;
    const std::uint64_t x = q >= 3 ? 5 : 1;
    EXPECT_EQ(gf2::multiply(1, x, q), x);
  }
  // x * x^{-1}: the multiplicative group of GF(2^8) has order 255.
  std::uint64_t a = 0x53, p = 1;
  for (int k = 0; k < 255; ++k) p = gf2::multiply(p, a, 8);
  EXPECT_EQ(p, 1u);
}

DisorderSpec alloy(double p, std::uint64_t key) {
  DisorderSpec d;
  d.kind = DisorderKind::binary_alloy;
  d.alloy_probability = p;
  d.randomness.key = key;
  d.hopping = {{{-1.0, -0.5}, {-0.5, -2.0}}};
  d.decay = {{{0.2, 0.4}, {0.4, 0.6}}};
  return d;
}

TEST(Disorder, AtomTypeIsComparatorOfKeyedOutput) {
  const Lattice lat(chain_spec(16));
  const DisorderSpec d = alloy(0.5, 5);
  for (std::uint64_t i = 0; i < 16; ++i) {
    const auto o = keyed_random(d.randomness, i, 4, 4);
    EXPECT_EQ(sample_atom_type(d, lat, i), o < 8 ? 1 : 0);
  }
}

TEST(Disorder, DegenerateProbabilities) {
  const Lattice lat(chain_spec(32));
  for (std::uint64_t i = 0; i < 32; ++i) {
    EXPECT_EQ(sample_atom_type(alloy(0.0, 3), lat, i), 0);
    EXPECT_EQ(sample_atom_type(alloy(1.0, 3), lat, i), 1);
  }
}

TEST(Disorder, QuarterProbabilityMarginal) {
  const Lattice lat(chain_spec(1024));
  const DisorderSpec d = alloy(0.25, 11);
  int ones = 0;
  for (std::uint64_t i = 0; i < 1024; ++i) ones += sample_atom_type(d, lat, i);
  const double sigma = std::sqrt(1024 * 0.25 * 0.75);
  EXPECT_LE(std::abs(ones - 256.0), 5 * sigma);
}

TEST(Disorder, HalfProbabilityMarginalOverKeys) {
  const Lattice lat(chain_spec(64));
  for (std::uint64_t key = 0; key < 20; ++key) {
    int ones = 0;
    for (std::uint64_t i = 0; i < 64; ++i) ones += sample_atom_type(alloy(0.5, key), lat, i);
    EXPECT_LE(std::abs(ones - 32.0), 5 * std::sqrt(16.0));
  }
}

TEST(Disorder, DisplacementEndpointAndOrdering) {
  const Lattice lat(chain_spec(8));
  DisorderSpec d;
  d.kind = DisorderKind::structural;
  d.displacement_bits = 1;
  d.displacement_width = 0.3;
  d.randomness.key = 17;
  bool saw_zero = false;
  for (std::uint64_t i = 0; i < 8; ++i) {
    const auto u = keyed_random(d.randomness, i, 5, 1);
    if (u == 0) {
      saw_zero = true;
      EXPECT_DOUBLE_EQ(sample_displacement(d, lat, i)[0], -0.3);
    }
  }
  EXPECT_TRUE(saw_zero);
  d.displacement_bits = 6;
  const DisorderedModel m(chain_spec(8), d);
  for (std::uint64_t i = 0; i + 1 < 8; ++i) EXPECT_LT(m.position(i)[0], m.position(i + 1)[0]);
}

TEST(Disorder, ZeroWidthReproducesCleanMatrix) {
  DisorderSpec clean;
  clean.hopping = {{{-1.0, -1.0}, {-1.0, -1.0}}};
  clean.decay = {{{0.3, 0.3}, {0.3, 0.3}}};
  DisorderSpec structural = clean;
  structural.kind = DisorderKind::structural;
  structural.displacement_width = 0.0;
  structural.randomness.key = 8;
  const auto a = assemble_hopping_matrix(chain_spec(16, Boundary::periodic), clean).dense();
  const auto b = assemble_hopping_matrix(chain_spec(16, Boundary::periodic), structural).dense();
  EXPECT_EQ((a - b).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Disorder, PeierlsPhasesAntisymmetric) {
  LatticeSpec l = chain_spec(16, Boundary::periodic);
  DisorderSpec d;
  d.kind = DisorderKind::magnetic;
  d.precision_bits = 6;
  d.randomness.key = 4;
  const Lattice lat(l);
  for (std::uint64_t j = 0; j < 16; ++j) {
    for (int s = 0; s < lat.sparsity(); ++s) {
      const SlotTarget t = lat.slot_target(j, s);
      const double a = sample_peierls_phase(d, lat, j, s);
      const double b = sample_peierls_phase(d, lat, t.site, lat.reverse_slot(s));
      EXPECT_NEAR(std::remainder(a + b, 2 * std::numbers::pi), 0.0, 1e-12);
    }
  }
  const Matrix h = assemble_hopping_matrix(l, d).dense();
  EXPECT_LE((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Disorder, ZeroPhaseBitsGivesZeroPhase) {
  const Lattice lat(chain_spec(16, Boundary::periodic));
  DisorderSpec d;
  d.kind = DisorderKind::magnetic;
  d.precision_bits = 4;
  for (std::uint64_t key = 0; key < 8; ++key) {
    d.randomness.key = key;
    for (std::uint64_t j = 0; j < 16; ++j) {
      if (peierls_phase_bits(d, lat, j, 1) == 0) EXPECT_EQ(sample_peierls_phase(d, lat, j, 1), 0.0);
    }
  }
}

TEST(Hopping, CleanChainIsScaledTridiagonal) {
  DisorderSpec d;
  d.hopping = {{{-1.0, -1.0}, {-1.0, -1.0}}};
  d.decay = {{{0.5, 0.5}, {0.5, 0.5}}};
  d.precision_bits = 8;
  d.max_distance = 2.0;  // unit bonds quantize exactly: 256 * 1 / 2 = 128
  const Matrix h = assemble_hopping_matrix(chain_spec(4), d).dense();
  Matrix expected = oracle::chain(4, -std::exp(-0.5), false);
  expected.diagonal().setConstant(-1.0);
  EXPECT_LE((h - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Hopping, DegenerateAlloyIsKeyIndependent) {
  DisorderSpec d = alloy(0.5, 1);
  d.hopping = {{{-0.7, -0.7}, {-0.7, -0.7}}};
  d.decay = {{{0.2, 0.2}, {0.2, 0.2}}};
  const Matrix a = assemble_hopping_matrix(chain_spec(16), d).dense();
  d.randomness.key = 999;
  const Matrix b = assemble_hopping_matrix(chain_spec(16), d).dense();
  EXPECT_EQ((a - b).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Hopping, NormBelowAlpha) {
  for (std::uint64_t key : {42u, 1u, 2u}) {
    const DisorderedModel m(chain_spec(8), alloy(0.5, key));
    const HoppingMatrix h = assemble_hopping_matrix(m);
    const Matrix dense = h.dense();
    const double norm = Eigen::JacobiSVD<Matrix>(dense).singularValues()(0);
    EXPECT_LE(norm, m.alpha());
    EXPECT_DOUBLE_EQ(m.alpha(), 2.0 * 3 * 2.0);
    EXPECT_LE(h.max_row_nonzeros(), 2 * m.sparsity());
  }
}

TEST(Hopping, DeterministicAndHermitianForAllKinds) {
  LatticeSpec l;
  l.dimension = 2;
  l.extents = {4, 4};
  l.boundary = Boundary::periodic;
  l.cutoff = 1.5;
  for (DisorderKind kind : {DisorderKind::none, DisorderKind::binary_alloy,
                            DisorderKind::structural, DisorderKind::magnetic}) {
    DisorderSpec d = alloy(0.5, 3);
    d.kind = kind;
    d.displacement_width = kind == DisorderKind::structural ? 0.2 : 0.0;
    const Matrix a = assemble_hopping_matrix(l, d).dense();
    const Matrix b = assemble_hopping_matrix(l, d).dense();
    EXPECT_EQ((a - b).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_LE((a - a.adjoint()).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(Hopping, DoubledProjectionRecoversHA) {
  const DisorderedModel m(chain_spec(16, Boundary::periodic), alloy(0.5, 42));
  const Matrix ht = encoded_target(m).dense();
  const Matrix h = assemble_hopping_matrix(m).dense();
  for (Eigen::Index i = 0; i < 16; ++i) {
    for (Eigen::Index j = 0; j < 16; ++j) {
      const int a = m.atom_type(static_cast<std::uint64_t>(i));
      const int b = m.atom_type(static_cast<std::uint64_t>(j));
      EXPECT_EQ(ht(2 * i + a, 2 * j + b), h(i, j));
    }
  }
}

TEST(Velocity, DiagonalHamiltonianGivesZero) {
  DisorderSpec d;
  d.hopping = {{{-1.0, -1.0}, {-1.0, -1.0}}};
  LatticeSpec l = chain_spec(8);
  l.cutoff = 0.5;  // self only
  const HoppingMatrix h = assemble_hopping_matrix(l, d);
  const HoppingMatrix v = velocity_operator(h, 0);
  EXPECT_EQ(v.matrix.nonZeros() == 0 ? 0.0 : Matrix(v.matrix).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Velocity, RealChainGivesImaginaryHermitianWithPairedSpectrum) {
  DisorderSpec d;
  d.hopping = {{{-1.0, -1.0}, {-1.0, -1.0}}};
  const HoppingMatrix h = assemble_hopping_matrix(chain_spec(8), d);
  const Matrix v = Matrix(velocity_operator(h, 0).matrix);
  EXPECT_EQ(v.real().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_LE((v - v.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
  Eigen::SelfAdjointEigenSolver<Matrix> es(v);
  const Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index k = 0; k < 8; ++k) EXPECT_NEAR(ev(k), -ev(7 - k), 1e-12);
}

TEST(Hopping, CoordinateExport) {
  DisorderSpec d;
  const HoppingMatrix h = assemble_hopping_matrix(chain_spec(4), d);
  std::ostringstream out;
  write_coordinate_text(out, h.matrix);
  std::istringstream in(out.str());
  long r, c;
  double re, im;
  int lines = 0;
  while (in >> r >> c >> re >> im) {
    EXPECT_EQ(Complex(re, im), Complex(h.matrix.coeff(r, c)));
    ++lines;
  }
  EXPECT_EQ(lines, h.matrix.nonZeros());
}

}  // namespace
}  // namespace disqla
