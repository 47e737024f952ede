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

// Command-line front end: run <config>, verify, bench, bqp-check.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "disqla/baseline.hpp"
#include "disqla/block_encoding.hpp"
#include "disqla/clock.hpp"
#include "disqla/config.hpp"
#include "disqla/errors.hpp"
#include "disqla/experiment.hpp"
#include "disqla/hopping.hpp"

namespace {

using namespace disqla;

int report(const RunResult& r) {
  for (const KeyOutcome& o : r.outcomes) {
    std::cout << "key " << o.key << ": " << (o.ok ? "ok" : "FAILED: " + o.error) << '\n';
  }
  std::cout << "wrote " << r.output_dir << "/manifest.json\n";
  return r.exit_status;
}

// The instances the acceptance suite checks, one per (dimension, kind).
std::vector<std::pair<LatticeSpec, DisorderSpec>> builtin_instances() {
  std::vector<std::pair<LatticeSpec, DisorderSpec>> out;
  for (int dim : {1, 2}) {
    for (DisorderKind kind : {DisorderKind::none, DisorderKind::binary_alloy,
                              DisorderKind::structural, DisorderKind::magnetic}) {
      LatticeSpec l;
      l.dimension = dim;
      l.extents = dim == 1 ? std::vector<int>{16} : std::vector<int>{4, 4};
      l.boundary = Boundary::periodic;
      DisorderSpec d;
      d.kind = kind;
      d.precision_bits = 4;
      d.hopping = {{{-1.0, -0.5}, {-0.5, -2.0}}};
      d.decay = {{{0.3, 0.5}, {0.5, 0.7}}};
      d.displacement_width = kind == DisorderKind::structural ? 0.1 : 0.0;
      d.randomness.key = 7;
      out.emplace_back(l, d);
    }
  }
  return out;
}

int verify_builtin(int cap) {
  int failures = 0;
  std::cout << std::setprecision(3);
  for (const auto& [l, d] : builtin_instances()) {
    const DisorderedModel model(l, d);
    const BlockEncoding be = assemble_full_encoding(l, d, cap);
    const Matrix block = extract_block(be);
    const Matrix target = encoded_target(model).dense();
    Matrix padded = Matrix::Zero(block.rows(), block.cols());
    padded.topLeftCorner(target.rows(), target.cols()) = target;
    const double dev = (block - padded).cwiseAbs().maxCoeff();
    const double unit = check_unitarity(be).worst();
    const bool ok = dev <= 1e-10 && unit <= 1e-12;
    failures += ok ? 0 : 1;
    std::cout << l.dimension << "D kind=" << static_cast<int>(d.kind) << " qubits=" << be.total_qubits()
              << " block_dev=" << dev << " unitarity=" << unit << (ok ? "  ok" : "  FAIL") << '\n';
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disordered free-fermion observables via simulated block encodings"};
  app.require_subcommand(1);
  std::vector<std::uint64_t> keys;
  std::string out;
  int threads = 1;
  int cap = 64;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--keys", keys, "Disorder keys (comma separated)")->delimiter(',');
    sub->add_option("--out", out, "Output directory");
    sub->add_option("--threads", threads, "Worker threads across keys")->check(CLI::PositiveNumber);
    sub->add_option("--cap-qubits", cap, "Largest encoding width")->check(CLI::Range(1, 64));
  };

  std::string config_path;
  CLI::App* run = app.add_subcommand("run", "Run an experiment config");
  run->add_option("config", config_path, "JSON config")->required();
  add_common(run);

  std::string verify_config;
  CLI::App* verify = app.add_subcommand("verify", "Check block encodings against the classical matrix");
  verify->add_option("config", verify_config, "JSON config (default: built-in instances)");
  add_common(verify);

  int bench_dim = 1;
  int extent = 0;
  int reps = 5;
  std::vector<int> degrees;
  CLI::App* bench = app.add_subcommand("bench", "Light-cone KPM scaling table");
  bench->add_option("--dimension", bench_dim, "Lattice dimension")->check(CLI::Range(1, 3));
  bench->add_option("--extent", extent, "Sites per axis (0 = default)");
  bench->add_option("--degrees", degrees, "Expansion degrees")->delimiter(',');
  bench->add_option("--repetitions", reps, "Timed repetitions per degree")->check(CLI::PositiveNumber);
  add_common(bench);

  std::string circuit_path;
  int random = 0;
  int qubits = 2;
  int depth = 2;
  CLI::App* bqp = app.add_subcommand("bqp-check", "Clock-Hamiltonian LDOS decision for gate circuits");
  bqp->add_option("circuit", circuit_path, "Circuit file");
  bqp->add_option("--random", random, "Random promise-satisfying circuits per key");
  bqp->add_option("--qubits", qubits, "Qubits of random circuits")->check(CLI::Range(1, 6));
  bqp->add_option("--depth", depth, "Gates of random circuits")->check(CLI::Range(1, 8));
  add_common(bqp);

  CLI11_PARSE(app, argc, argv);

  try {
    RunOptions opt;
    opt.output = out;
    opt.keys = keys;
    opt.threads = threads;
    opt.cap_qubits = cap;
    if (*run) return report(run_experiment(load_config(config_path), opt));
    if (*verify) {
      if (verify_config.empty()) return verify_builtin(cap);
      ExperimentConfig c = load_config(verify_config);
      c.task = Task::verify_encoding;
      return report(run_experiment(c, opt));
    }
    if (*bench) {
      ExperimentConfig c;
      c.task = Task::benchmark;
      c.output = out.empty() ? "bench_out" : out;
      c.parameters.bench_dimension = bench_dim;
      c.parameters.extent = extent;
      c.parameters.degrees = degrees;
      c.parameters.repetitions = reps;
      opt.output.clear();
      const RunResult r = run_experiment(c, opt);
      for (const auto& o : r.outcomes) {
        for (const auto& [k, v] : o.metrics) std::cout << k << " = " << v << '\n';
        for (const auto& [k, v] : o.notes) std::cout << k << ": " << v << '\n';
      }
      return report(r);
    }
    if (*bqp) {
      if (circuit_path.empty() && random == 0) {
        std::cerr << "bqp-check: give a circuit file or --random N\n";
        return 2;
      }
      if (!circuit_path.empty() && out.empty()) {
        std::ifstream in(circuit_path);
        if (!in) throw ConfigError("cannot open '" + circuit_path + "'");
        const GateCircuit g = parse_gate_circuit(in);
        const DecisionReport r = ldos_decision(g);
        std::cout << std::setprecision(10) << "verdict: " << to_string(r.verdict) << '\n'
                  << "S'_jj: " << r.value << " (index " << r.index << ")\n"
                  << "thresholds: YES >= " << r.yes_threshold << ", NO <= " << r.no_threshold << '\n'
                  << "margin: " << r.margin << '\n'
                  << "|alpha_x1|^2: " << r.output_probability << '\n';
        return r.verdict == Verdict::promise_violated ? 1 : 0;
      }
      ExperimentConfig c;
      c.task = Task::bqp_check;
      c.output = out.empty() ? "bqp_out" : out;
      c.parameters.circuit = circuit_path;
      c.parameters.random_circuits = random;
      c.parameters.circuit_qubits = qubits;
      c.parameters.circuit_depth = depth;
      opt.output.clear();
      return report(run_experiment(c, opt));
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
