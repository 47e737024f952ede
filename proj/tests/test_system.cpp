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
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "disqla/baseline.hpp"
#include "disqla/clock.hpp"
#include "disqla/config.hpp"
#include "disqla/errors.hpp"
#include "disqla/experiment.hpp"
#include "oracles.hpp"

namespace disqla {
namespace {

namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

GateCircuit parse(const std::string& text) {
  std::istringstream in(text);
  return parse_gate_circuit(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- clock construction ----

TEST(Clock, SingleGateSpectrum) {
  const GateCircuit c = parse("qubits 1\nH 0\n");
  const ClockConstruction cc = clock_unitary(extend_circuit(c), 1);
  EXPECT_EQ(cc.period, 3);
  std::vector<double> got = active_spectrum(cc);
  std::vector<double> want = {1.0, -0.5, -0.5, 0.5, -1.0, 0.5};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], want[k], 1e-10);
  EXPECT_EQ(expected_spectrum(3, 1).size(), 6u);
}

TEST(Clock, SpectrumOfRandomCircuits) {
  for (int depth = 1; depth <= 3; ++depth) {
    const GateCircuit c = random_circuit(2, depth, 2, 100 + static_cast<std::uint64_t>(depth));
    const ClockConstruction cc = clock_unitary(extend_circuit(c), 2);
    std::vector<double> got = active_spectrum(cc);
    std::vector<double> want = expected_spectrum(cc.period, 2);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], want[k], 1e-10);
  }
}

TEST(Clock, ExtendedProductAndPower) {
  const GateCircuit c = random_circuit(2, 3, 2, 9);
  const std::vector<LocalGate> v = extend_circuit(c);
  ASSERT_EQ(v.size(), 7u);
  Matrix prod = Matrix::Identity(4, 4);
  for (const LocalGate& g : v) prod = embed_gate(g, 2) * prod;
  const Matrix u = circuit_unitary(c);
  EXPECT_LE((prod - u.adjoint() * embed_gate(named_gate("Z", {0}), 2) * u).cwiseAbs().maxCoeff(), 1e-12);

  const ClockConstruction cc = clock_unitary(v, 2);
  const Eigen::Index active = static_cast<Eigen::Index>(cc.period) * 4;
  Matrix wm = Matrix::Identity(cc.w.rows(), cc.w.cols());
  for (int k = 0; k < cc.period; ++k) wm = cc.w * wm;
  const Matrix block = wm.topLeftCorner(active, active);
  EXPECT_LE((block * block - Matrix::Identity(active, active)).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LE((block.topLeftCorner(4, 4) - prod).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LE((cc.w * cc.w.adjoint() - Matrix::Identity(cc.w.rows(), cc.w.cols())).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Clock, SparsityOfTheHamiltonian) {
  const GateCircuit c = parse("qubits 2\nX 0\nCNOT 0 1\nSWAP 0 1\n");
  const ClockConstruction cc = clock_unitary(extend_circuit(c), 2);
  EXPECT_TRUE(cc.sparse_gate_set);
  EXPECT_LE(cc.max_row_nonzeros, 4);
  EXPECT_LE((cc.h - cc.h.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Clock, DecisionsOnDeterministicCircuits) {
  const DecisionReport flip = ldos_decision(parse("qubits 1\ninput 0\nX 0\n"));
  EXPECT_NEAR(flip.output_probability, 1.0, 1e-12);
  const DecisionReport stay = ldos_decision(parse("qubits 1\ninput 0\nI 0\n"));
  EXPECT_NEAR(stay.output_probability, 0.0, 1e-12);
  EXPECT_NE(flip.verdict, Verdict::promise_violated);
  EXPECT_NE(stay.verdict, Verdict::promise_violated);
  EXPECT_NE(flip.verdict, stay.verdict);
  for (const DecisionReport& r : {flip, stay}) {
    EXPECT_NEAR(r.value, r.predicted, 1e-10);
    EXPECT_NEAR(r.eta, r.c * kPi / (2.0 * 3.0), 1e-15);
  }
}

TEST(Clock, DecisionMatchesOutputProbability) {
  int decided = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GateCircuit c = random_circuit(2, 2, 2, seed);
    const DecisionReport r = ldos_decision(c);
    EXPECT_NEAR(r.value, r.predicted, 1e-10);
    const double p = output_probability(c);
    if (p >= 2.0 / 3.0 || p <= 1.0 / 3.0) {
      ASSERT_NE(r.verdict, Verdict::promise_violated) << "seed " << seed;
      EXPECT_EQ(r.verdict == Verdict::yes, p >= 2.0 / 3.0) << "seed " << seed;
      ++decided;
    }
  }
  EXPECT_GT(decided, 0);
}

TEST(Clock, ParserDiagnostics) {
  auto message = [](const std::string& text) {
    try {
      parse(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message("qubits 2\nH 5\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("H 0\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("qubits 1\n\n# c\nFOO 0\n").find("line 4"), std::string::npos);
  EXPECT_NE(message("qubits 2\nU1 1 0 0 0 0 0 0 0\n").find("line 2"), std::string::npos);
  // Round trip.
  const GateCircuit c = random_circuit(3, 4, 3, 5);
  std::stringstream ss;
  write_gate_circuit(ss, c);
  const GateCircuit back = parse_gate_circuit(ss);
  EXPECT_LE((circuit_unitary(back) - circuit_unitary(c)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(back.input, c.input);
}

TEST(Clock, QubitCap) {
  const GateCircuit c = random_circuit(4, 3, 1, 2);
  EXPECT_THROW(clock_unitary(extend_circuit(c), 4, 6), SizeError);
}

// ---- classical baseline ----

TEST(Baseline, CleanChainBand) {
  const int n = 32;
  const EigenDecomposition eig = exact_diagonalize(oracle::chain(n, -1.0, true));
  std::vector<double> want;
  for (int k = 0; k < n; ++k) want.push_back(-2.0 * std::cos(2.0 * kPi * k / n));
  std::sort(want.begin(), want.end());
  for (int k = 0; k < n; ++k) EXPECT_NEAR(eig.eigenvalues(k), want[static_cast<std::size_t>(k)], 1e-12);
  EXPECT_LE(eig.residual, 1e-12);
  EXPECT_LE(eig.unitarity_defect, 1e-12);
}

TEST(Baseline, Contracts) {
  Matrix bad = Matrix::Zero(3, 3);
  bad(0, 1) = 1.0;
  EXPECT_THROW(exact_diagonalize(bad), ContractViolation);
  EXPECT_THROW(exact_diagonalize(Matrix::Identity(8, 8), 4), SizeError);
}

TEST(Baseline, MatrixFunctionMatchesOracle) {
  const Matrix h = oracle::chain(12, -0.7, false);
  const EigenDecomposition eig = exact_diagonalize(h);
  const auto f = [](double x) { return Complex{oracle::fermi(x, 3.0)}; };
  EXPECT_LE((matrix_function(eig, f) - oracle::dense_function(h, f)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Baseline, LightConeKpm) {
  const int n = 64;
  const Matrix hd = oracle::chain(n, -1.0, false);
  const SparseMatrix h = hd.sparseView();
  const double alpha = 2.5;
  ChebyshevExpansion p;
  for (int k = 0; k <= 12; ++k) p.coefficients.push_back(Complex{1.0 / (k + 1), 0.1 * k});
  const std::uint64_t j = 32;
  const int d = p.degree();
  const Matrix dense = oracle::dense_function(hd, [&](double x) {
    Complex sum{};
    for (int k = 0; k <= d; ++k) sum += p.coefficients[static_cast<std::size_t>(k)] * std::cos(k * std::acos(x / alpha));
    return sum;
  });
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(n); ++i) {
    const KpmElement r = kpm_lightcone_element(h, alpha, p, i, j);
    const KpmElement full = kpm_lightcone_element(h, alpha, p, i, j, ConeMode::full_lattice);
    EXPECT_EQ(r.value, full.value);
    const auto dist = static_cast<int>(i > j ? i - j : j - i);
    if (dist > d) EXPECT_EQ(r.value, Complex{});
    EXPECT_LE(std::abs(r.value - dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))), 1e-10);
    EXPECT_EQ(r.touched_sites, static_cast<std::uint64_t>(2 * d + 1));
  }
}

TEST(Baseline, LightConeCounts) {
  const SparseMatrix h = oracle::chain(101, -1.0, false).sparseView();
  for (int depth : {0, 1, 5, 20}) {
    EXPECT_EQ(light_cone(h, 50, depth).size(), static_cast<std::size_t>(2 * depth + 1));
  }
  EXPECT_EQ(light_cone(h, 0, 5).size(), 6u);
}

TEST(Baseline, ScalingTableAndCsv) {
  const ScalingTable t = benchmark_lightcone_scaling(1, {4, 8, 16, 32}, 128, 1);
  ASSERT_EQ(t.rows.size(), 4u);
  for (const ScalingRow& r : t.rows) EXPECT_EQ(r.touched_sites, static_cast<std::uint64_t>(2 * r.degree + 1));
  EXPECT_NEAR(t.touched_exponent, 1.0, 0.1);
  const ScalingTable clipped = benchmark_lightcone_scaling(1, {4, 100}, 64, 1);
  EXPECT_EQ(clipped.rows.size(), 1u);
  EXPECT_FALSE(clipped.warnings.empty());
  std::ostringstream out;
  write_scaling_csv(out, t);
  EXPECT_EQ(out.str().rfind('#', 0), 0u);
  EXPECT_NE(out.str().find("degree,touched_sites,median_seconds"), std::string::npos);
  EXPECT_NEAR(log_log_slope({1, 2, 4, 8}, {3, 12, 48, 192}), 2.0, 1e-12);
}

// ---- config and experiment runner ----

std::string ldos_config(const std::string& extra_model = "") {
  return R"({
  "schema_version": 1,
  "task": "ldos",
  "model": {
    "lattice": {"dimension": 1, "extents": [16], "boundary": "periodic"},
    "disorder": {"kind": "binary_alloy", "hopping": [[-1.0, -0.5], [-0.5, 0.8]],
                 "decay": [[0.2, 0.3], [0.3, 0.1]], "precision_bits": 5)" + extra_model + R"(}
  },
  "parameters": {"eta": 0.2, "eps": 1e-6, "omega": [-0.5, 0.5]},
  "keys": [1, 2, 3]
})";
}

TEST(Config, ParsesAndRoundTrips) {
  const ExperimentConfig c = parse_config(ldos_config());
  EXPECT_EQ(c.task, Task::ldos);
  EXPECT_EQ(c.lattice.extents, std::vector<int>{16});
  EXPECT_EQ(c.disorder.kind, DisorderKind::binary_alloy);
  EXPECT_EQ(c.keys.size(), 3u);
  const ExperimentConfig again = parse_config(resolved_config_json(c));
  EXPECT_EQ(resolved_config_json(again), resolved_config_json(c));
  EXPECT_EQ(config_hash(again), config_hash(c));
  EXPECT_EQ(config_hash(c).size(), 32u);
}

TEST(Config, RejectsUnknownFieldsWithPath) {
  try {
    parse_config(ldos_config(", \"bogus\": 1"));
    FAIL() << "accepted an unknown field";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("bogus"), std::string::npos) << e.what();
  }
  try {
    parse_config(R"({"schema_version": 1, "task": "nope"})");
    FAIL() << "accepted an unknown task";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("task"), std::string::npos) << e.what();
  }
}

TEST(Config, SyntaxErrorsNameTheLine) {
  try {
    parse_config("{\n  \"schema_version\": 1,\n  \"task\": ldos\n}");
    FAIL() << "accepted malformed JSON";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Experiment, DeterministicAcrossRuns) {
  const fs::path base = fs::temp_directory_path() / "disqla_test_determinism";
  fs::remove_all(base);
  const ExperimentConfig c = parse_config(ldos_config());
  RunOptions a;
  a.output = (base / "a").string();
  RunOptions b;
  b.output = (base / "b").string();
  b.threads = 3;
  const RunResult ra = run_experiment(c, a);
  const RunResult rb = run_experiment(c, b);
  EXPECT_EQ(ra.exit_status, 0);
  EXPECT_EQ(rb.exit_status, 0);
  int csvs = 0;
  for (const auto& e : fs::directory_iterator(base / "a")) {
    if (e.path().extension() != ".csv") continue;
    ++csvs;
    EXPECT_EQ(slurp(e.path()), slurp(base / "b" / e.path().filename())) << e.path();
  }
  EXPECT_EQ(csvs, 3);
  EXPECT_TRUE(fs::exists(base / "a" / "manifest.json"));
  EXPECT_TRUE(fs::exists(base / "a" / "summary.json"));
  fs::remove_all(base);
}

TEST(Experiment, VerifyEncodingTask) {
  const fs::path base = fs::temp_directory_path() / "disqla_test_verify";
  fs::remove_all(base);
  ExperimentConfig c = parse_config(ldos_config());
  c.task = Task::verify_encoding;
  c.keys = {4};
  c.parameters.max_degree = 4;
  RunOptions o;
  o.output = base.string();
  const RunResult r = run_experiment(c, o);
  ASSERT_EQ(r.outcomes.size(), 1u);
  ASSERT_TRUE(r.outcomes[0].ok) << r.outcomes[0].error;
  for (const auto& [name, value] : r.outcomes[0].metrics) {
    if (name.find("deviation") != std::string::npos) EXPECT_LE(value, 1e-10) << name;
  }
  fs::remove_all(base);
}

TEST(Experiment, FailingKeyDoesNotStopSweep) {
  const fs::path base = fs::temp_directory_path() / "disqla_test_failure";
  fs::remove_all(base);
  ExperimentConfig c = parse_config(ldos_config());
  c.task = Task::verify_encoding;
  c.keys = {1, 2};
  RunOptions o;
  o.output = base.string();
  o.cap_qubits = 4;
  const RunResult r = run_experiment(c, o);
  EXPECT_EQ(r.exit_status, 3);
  ASSERT_EQ(r.outcomes.size(), 2u);
  EXPECT_FALSE(r.outcomes[0].ok);
  EXPECT_TRUE(fs::exists(base / "summary.json"));
  fs::remove_all(base);
}

}  // namespace
}  // namespace disqla
