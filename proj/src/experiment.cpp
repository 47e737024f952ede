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

#include "disqla/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "disqla/baseline.hpp"
#include "disqla/block_encoding.hpp"
#include "disqla/clock.hpp"
#include "disqla/conductivity.hpp"
#include "disqla/errors.hpp"
#include "disqla/hopping.hpp"
#include "disqla/keyed_random.hpp"
#include "disqla/observables.hpp"

namespace disqla {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<std::uint64_t> selected_sites(const TaskParameters& p, std::uint64_t n) {
  std::vector<std::uint64_t> sites = p.sites;
  if (sites.empty()) {
    const std::uint64_t count = n <= 64 ? n : 16;
    for (std::uint64_t i = 0; i < count; ++i) sites.push_back(i);
  }
  for (std::uint64_t s : sites) {
    if (s >= n) {
      throw DomainError("site " + std::to_string(s) + " outside a lattice of " + std::to_string(n) +
                        " sites");
    }
  }
  return sites;
}

DisorderedModel model_for(const ExperimentConfig& c, std::uint64_t key) {
  DisorderSpec d = c.disorder;
  d.randomness.key = key;
  return DisorderedModel(c.lattice, d);
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << std::setprecision(17);
  return out;
}

void task_rdm(const ExperimentConfig& c, std::uint64_t key, std::ostream& out, KeyOutcome& o) {
  const TaskParameters& p = c.parameters;
  const DisorderedModel model = model_for(c, key);
  const HoppingMatrix h = assemble_hopping_matrix(model);
  const MatrixResult d = one_rdm(h.matrix, model.alpha(), p.beta, p.mu, p.eps);
  out << "i,j,re,im,error_bound\n";
  const auto sites = selected_sites(p, model.num_sites());
  for (std::uint64_t i : sites) {
    for (std::uint64_t j : sites) {
      const Complex v = d.value(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      out << i << ',' << j << ',' << v.real() << ',' << v.imag() << ',' << d.error_bound << '\n';
    }
  }
  o.metrics["degree"] = d.degree;
  o.metrics["error_bound"] = d.error_bound;
  o.metrics["filling"] = d.value.trace().real() / static_cast<double>(model.num_sites());
}

void task_ldos(const ExperimentConfig& c, std::uint64_t key, std::ostream& out, KeyOutcome& o) {
  const TaskParameters& p = c.parameters;
  const DisorderedModel model = model_for(c, key);
  const HoppingMatrix h = assemble_hopping_matrix(model);
  const auto sites = selected_sites(p, model.num_sites());
  out << "omega,site,ldos,error_bound\n";
  double mean = 0.0;
  for (double w : p.omega) {
    const MatrixResult s = spectral_function(h.matrix, model.alpha(), w, p.eta, p.mu, p.eps);
    const double scale = 1.0 / (std::numbers::pi * p.eta);
    for (std::uint64_t i : sites) {
      const double v = s.value(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real() * scale;
      mean += v;
      out << w << ',' << i << ',' << v << ',' << s.error_bound * scale << '\n';
    }
    o.metrics["degree"] = std::max(o.metrics["degree"], static_cast<double>(s.degree));
  }
  o.metrics["mean_ldos"] = mean / static_cast<double>(sites.size() * p.omega.size());
}

void task_momentum_ldos(const ExperimentConfig& c, std::uint64_t key, std::ostream& out,
                        KeyOutcome& o) {
  const TaskParameters& p = c.parameters;
  const DisorderedModel model = model_for(c, key);
  const HoppingMatrix h = assemble_hopping_matrix(model);
  out << "omega,k_index,ldos\n";
  for (double w : p.omega) {
    const Eigen::VectorXd a = ldos_momentum(h.matrix, model.alpha(), w, p.eta, p.mu, p.eps,
                                            c.lattice.extents);
    for (Eigen::Index k = 0; k < a.size(); ++k) out << w << ',' << k << ',' << a(k) << '\n';
    o.metrics["max_ldos"] = std::max(o.metrics["max_ldos"], a.maxCoeff());
  }
}

void task_greens(const ExperimentConfig& c, std::uint64_t key, std::ostream& out, KeyOutcome& o) {
  const TaskParameters& p = c.parameters;
  const DisorderedModel model = model_for(c, key);
  const HoppingMatrix h = assemble_hopping_matrix(model);
  const auto sites = selected_sites(p, model.num_sites());
  out << "omega,i,j,re,im,error_bound\n";
  for (double w : p.omega) {
    const MatrixResult g = retarded_greens(h.matrix, model.alpha(), w, p.eta, p.mu, p.eps);
    for (std::uint64_t i : sites) {
      for (std::uint64_t j : sites) {
        const Complex v =
            g.value(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) / p.eta;
        out << w << ',' << i << ',' << j << ',' << v.real() << ',' << v.imag() << ','
            << g.error_bound / p.eta << '\n';
      }
    }
    o.metrics["degree"] = std::max(o.metrics["degree"], static_cast<double>(g.degree));
  }
}

void task_conductivity(const ExperimentConfig& c, std::uint64_t key, std::ostream& out,
                       KeyOutcome& o) {
  const TaskParameters& p = c.parameters;
  const DisorderedModel model = model_for(c, key);
  const HoppingMatrix h = assemble_hopping_matrix(model);
  ConductivityOptions opt;
  opt.beta = p.beta;
  opt.mu = p.mu;
  opt.eta = p.eta;
  opt.eps = p.eps;
  opt.cell_volume = p.cell_volume;
  opt.nodes = p.nodes;
  opt.trace = p.probes > 0 ? TraceMode::hutchinson : TraceMode::exact;
  opt.probes = std::max(p.probes, 1);
  opt.key = siphash64(key, 0x6b75626f);
  const SparseMatrix vx = velocity_operator(h, 0).matrix;
  out << "component,re,im,budget,nodes\n";
  auto emit = [&](const std::string& name, const ConductivityResult& r) {
    out << name << ',' << r.sigma.real() << ',' << r.sigma.imag() << ',' << r.budget() << ','
        << r.nodes << '\n';
    o.metrics["sigma_" + name] = r.sigma.real();
    o.metrics["budget_" + name] = r.budget();
  };
  emit("xx", kubo_bastin_conductivity(h.matrix, model.alpha(), vx, vx, opt));
  if (c.lattice.dimension >= 2) {
    const SparseMatrix vy = velocity_operator(h, 1).matrix;
    const ConductivityResult xy = kubo_bastin_conductivity(h.matrix, model.alpha(), vx, vy, opt);
    const ConductivityResult yx = kubo_bastin_conductivity(h.matrix, model.alpha(), vy, vx, opt);
    emit("xy", xy);
    emit("yx", yx);
    ConductivityResult hall = xy;
    hall.sigma = 0.5 * (xy.sigma - yx.sigma);
    hall.polynomial_budget = 0.5 * (xy.polynomial_budget + yx.polynomial_budget);
    hall.quadrature_budget = 0.5 * (xy.quadrature_budget + yx.quadrature_budget);
    hall.trace_standard_error = 0.5 * std::hypot(xy.trace_standard_error, yx.trace_standard_error);
    emit("hall", hall);
  }
}

void task_bqp(const ExperimentConfig& c, std::uint64_t key, std::ostream& out, KeyOutcome& o) {
  const TaskParameters& p = c.parameters;
  std::vector<GateCircuit> circuits;
  if (!p.circuit.empty()) {
    std::ifstream in(p.circuit);
    if (!in) throw ConfigError("parameters.circuit: cannot open '" + p.circuit + "'");
    circuits.push_back(parse_gate_circuit(in));
  }
  for (int k = 0, attempt = 0; k < p.random_circuits; ++attempt) {
    if (attempt > 1000 * (p.random_circuits + 1)) {
      throw std::runtime_error("could not draw promise-satisfying circuits");
    }
    GateCircuit g = random_circuit(p.circuit_qubits, p.circuit_depth, p.circuit_qubits,
                                   siphash64(key, static_cast<std::uint64_t>(attempt)));
    const double prob = output_probability(g);
    if (prob >= 2.0 / 3.0 || prob <= 1.0 / 3.0) {
      circuits.push_back(std::move(g));
      ++k;
    }
  }
  if (circuits.empty()) throw ConfigError("parameters: bqp-check needs a circuit or random_circuits > 0");
  out << "circuit,depth,qubits,index,output_probability,value,predicted,verdict,margin,"
         "spectrum_deviation,max_row_nonzeros\n";
  int correct = 0;
  int decided = 0;
  double worst_spectrum = 0.0;
  for (std::size_t n = 0; n < circuits.size(); ++n) {
    const GateCircuit& g = circuits[n];
    g.validate();
    const ClockConstruction cc = clock_unitary(extend_circuit(g), g.qubits);
    const DecisionReport r = ldos_decision(cc, g);
    const std::vector<double> got = active_spectrum(cc);
    const std::vector<double> want = expected_spectrum(cc.period, g.qubits);
    double dev = 0.0;
    for (std::size_t k = 0; k < got.size(); ++k) dev = std::max(dev, std::abs(got[k] - want[k]));
    worst_spectrum = std::max(worst_spectrum, dev);
    const bool promised = r.output_probability >= 2.0 / 3.0 || r.output_probability <= 1.0 / 3.0;
    if (promised) {
      ++decided;
      const Verdict want_verdict = r.output_probability >= 2.0 / 3.0 ? Verdict::yes : Verdict::no;
      if (r.verdict == want_verdict) ++correct;
    }
    out << n << ',' << g.depth() << ',' << g.qubits << ',' << r.index << ','
        << r.output_probability << ',' << r.value << ',' << r.predicted << ','
        << to_string(r.verdict) << ',' << r.margin << ',' << dev << ',' << cc.max_row_nonzeros
        << '\n';
  }
  o.metrics["circuits"] = static_cast<double>(circuits.size());
  o.metrics["promise_circuits"] = decided;
  o.metrics["correct"] = correct;
  o.metrics["spectrum_deviation"] = worst_spectrum;
}

void task_benchmark(const ExperimentConfig& c, std::ostream& out, KeyOutcome& o) {
  const TaskParameters& p = c.parameters;
  const std::vector<int> degrees =
      p.degrees.empty() ? default_benchmark_degrees(p.bench_dimension) : p.degrees;
  const ScalingTable t = benchmark_lightcone_scaling(p.bench_dimension, degrees, p.extent, p.repetitions);
  write_scaling_csv(out, t);
  o.metrics["touched_exponent"] = t.touched_exponent;
  o.metrics["time_exponent"] = t.time_exponent;
  for (std::size_t k = 0; k < t.warnings.size(); ++k) o.notes["warning_" + std::to_string(k)] = t.warnings[k];
}

void task_verify(const ExperimentConfig& c, std::uint64_t key, int cap, std::ostream& out,
                 KeyOutcome& o) {
  const DisorderedModel model = model_for(c, key);
  const BlockEncoding be = assemble_full_encoding(c.lattice, model.disorder(), cap);
  const Matrix block = extract_block(be);
  const Matrix target = encoded_target(model).dense();
  Matrix padded = Matrix::Zero(block.rows(), block.cols());
  padded.topLeftCorner(target.rows(), target.cols()) = target;
  const double deviation = (block - padded).cwiseAbs().maxCoeff();
  const UnitarityReport u = check_unitarity(be);
  out << "metric,value\n";
  out << "total_qubits," << be.total_qubits() << '\n';
  out << "alpha," << be.alpha << '\n';
  out << "block_deviation," << deviation << '\n';
  out << "gate_unitarity_defect," << u.gate_defect << '\n';
  out << "sampled_gram_defect," << u.sampled_gram_defect << '\n';
  o.metrics["block_deviation"] = deviation;
  o.metrics["unitarity_defect"] = u.worst();
  o.metrics["total_qubits"] = be.total_qubits();
  if (model.doubled()) {
    double worst = 0.0;
    for (int d = 0; d <= c.parameters.max_degree; ++d) {
      const double v = verify_plus_projection(model, d);
      out << "projection_deviation_d" << d << ',' << v << '\n';
      worst = std::max(worst, v);
    }
    o.metrics["projection_deviation"] = worst;
  }
}

}  // namespace

KeyOutcome run_key(const ExperimentConfig& config, std::uint64_t key, int cap_qubits,
                   const std::string& out_dir) {
  KeyOutcome o;
  o.key = key;
  const std::string name = config.task == Task::benchmark
                               ? "benchmark_d" + std::to_string(config.parameters.bench_dimension) + ".csv"
                               : to_string(config.task) + "_key" + std::to_string(key) + ".csv";
  const std::string path = (fs::path(out_dir) / name).string();
  try {
    std::ofstream out = open_csv(path);
    switch (config.task) {
      case Task::rdm: task_rdm(config, key, out, o); break;
      case Task::ldos: task_ldos(config, key, out, o); break;
      case Task::momentum_ldos: task_momentum_ldos(config, key, out, o); break;
      case Task::greens: task_greens(config, key, out, o); break;
      case Task::conductivity: task_conductivity(config, key, out, o); break;
      case Task::bqp_check: task_bqp(config, key, out, o); break;
      case Task::benchmark: task_benchmark(config, out, o); break;
      case Task::verify_encoding: task_verify(config, key, cap_qubits, out, o); break;
    }
    out.close();
    if (!out) throw std::runtime_error("failed writing " + path);
    o.files.push_back(name);
    o.ok = true;
  } catch (const std::exception& e) {
    o.ok = false;
    o.error = e.what();
    std::error_code ec;
    fs::remove(path, ec);
  }
  return o;
}

RunResult run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  RunResult result;
  result.output_dir = options.output.empty() ? config.output : options.output;
  ExperimentConfig resolved = config;
  resolved.output = result.output_dir;
  if (!options.keys.empty()) resolved.keys = options.keys;
  if (resolved.task == Task::benchmark) resolved.keys.resize(1);
  if (options.threads < 1) throw ConfigError("--threads must be positive");
  fs::create_directories(result.output_dir);

  const std::size_t n = resolved.keys.size();
  result.outcomes.resize(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      result.outcomes[k] = run_key(resolved, resolved.keys[k], options.cap_qubits, result.output_dir);
    }
  };
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(options.threads), n);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  const std::string hash = config_hash(resolved);
  json summary;
  summary["task"] = to_string(resolved.task);
  summary["config_hash"] = hash;
  summary["keys"] = json::array();
  json files = json::array();
  for (const KeyOutcome& o : result.outcomes) {
    json entry{{"key", o.key}, {"status", o.ok ? "ok" : "failed"}};
    if (!o.ok) {
      entry["error"] = o.error;
      result.exit_status = 3;
    }
    entry["files"] = o.files;
    entry["metrics"] = o.metrics;
    if (!o.notes.empty()) entry["notes"] = o.notes;
    summary["keys"].push_back(entry);
    for (const auto& f : o.files) files.push_back(f);
  }
  {
    std::ofstream out(fs::path(result.output_dir) / "summary.json");
    out << summary.dump(2) << '\n';
  }
  json manifest;
  manifest["config"] = json::parse(resolved_config_json(resolved));
  manifest["config_hash"] = hash;
  manifest["version"] = std::string(kVersion);
  manifest["schema_version"] = kSchemaVersion;
  manifest["keyed_hash"] = std::string(kKeyedHashId);
  manifest["files"] = files;
  manifest["summary"] = "summary.json";
  {
    std::ofstream out(fs::path(result.output_dir) / "manifest.json");
    out << manifest.dump(2) << '\n';
  }
  return result;
}

}  // namespace disqla
