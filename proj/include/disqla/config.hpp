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

#ifndef DISQLA_CONFIG_HPP
#define DISQLA_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "disqla/disorder.hpp"
#include "disqla/lattice.hpp"

namespace disqla {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class Task { rdm, ldos, momentum_ldos, greens, conductivity, bqp_check, benchmark, verify_encoding };

std::string to_string(Task t);
Task task_from_string(const std::string& s);

struct TaskParameters {
  double beta = 10.0;
  double mu = 0.0;
  double eta = 0.1;
  double eps = 1e-6;
  double delta = 0.05;
  std::vector<double> omega{0.0};
  /// Empty selects every site when N <= 64, else the first 16.
  std::vector<std::uint64_t> sites;
  /// Hutchinson probes K for traces; 0 means exact traces.
  int probes = 0;
  /// Conductivity: Lobatto degree (0 = automatic) and unit-cell volume.
  int nodes = 0;
  double cell_volume = 1.0;
  /// verify-encoding: largest power d in the projection check.
  int max_degree = 8;
  /// bqp-check: circuit file, or random promise-satisfying circuits per key.
  std::string circuit;
  int random_circuits = 0;
  int circuit_qubits = 2;
  int circuit_depth = 2;
  /// benchmark.
  int bench_dimension = 1;
  std::vector<int> degrees;
  int extent = 0;
  int repetitions = 5;
};

struct ExperimentConfig {
  int schema_version = kSchemaVersion;
  Task task = Task::ldos;
  LatticeSpec lattice;
  DisorderSpec disorder;
  TaskParameters parameters;
  std::string output = "out";
  std::vector<std::uint64_t> keys{0};
};

/// Parses and validates a JSON config.  Unknown fields, type mismatches
/// and out-of-range values raise ConfigError naming the field path (and
/// the line for syntax errors).
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

/// Fully resolved config as canonical JSON (sorted keys, 2-space indent).
std::string resolved_config_json(const ExperimentConfig& c);

/// BLAKE2b-128 of the canonical JSON, hex encoded.
std::string config_hash(const ExperimentConfig& c);

}  // namespace disqla

#endif
