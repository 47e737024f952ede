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

#ifndef DISQLA_EXPERIMENT_HPP
#define DISQLA_EXPERIMENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "disqla/config.hpp"

namespace disqla {

struct RunOptions {
  /// Overrides of the config's output directory and key list when non-empty.
  std::string output;
  std::vector<std::uint64_t> keys;
  int threads = 1;
  int cap_qubits = 64;
};

struct KeyOutcome {
  std::uint64_t key = 0;
  bool ok = false;
  std::string error;
  std::vector<std::string> files;
  std::map<std::string, double> metrics;
  std::map<std::string, std::string> notes;
};

struct RunResult {
  /// 0 when every key succeeded, 3 when at least one key failed.
  int exit_status = 0;
  std::string output_dir;
  std::vector<KeyOutcome> outcomes;
};

/// Runs the task once per key (keys in parallel up to `threads`), writing
/// <out>/<task>_key<k>.csv per key, then summary.json and manifest.json.
/// A failing key is recorded in the summary and does not stop the sweep.
/// Outputs depend only on the resolved config, except benchmark timings.
RunResult run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

/// Work for a single key, without touching the file system except for the
/// key's own CSV in `out_dir`.
KeyOutcome run_key(const ExperimentConfig& config, std::uint64_t key, int cap_qubits,
                   const std::string& out_dir);

}  // namespace disqla

#endif
