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

#include "disqla/config.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>
#include <sodium.h>

#include "disqla/errors.hpp"

namespace disqla {

namespace {

using nlohmann::json;

class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail("", "expected an object");
  }

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    throw ConfigError(where(field) + ": " + what);
  }

  std::string where(const std::string& field) const {
    if (field.empty()) return path_.empty() ? "<root>" : path_;
    return path_.empty() ? field : path_ + "." + field;
  }

  const json* find(const std::string& field) {
    used_.insert(field);
    const auto it = j_.find(field);
    return it == j_.end() ? nullptr : &*it;
  }

  void number(const std::string& field, double& out) {
    if (const json* v = find(field)) {
      if (!v->is_number()) fail(field, "expected a number");
      out = v->get<double>();
    }
  }

  void integer(const std::string& field, int& out) {
    if (const json* v = find(field)) {
      if (!v->is_number_integer()) fail(field, "expected an integer");
      out = v->get<int>();
    }
  }

  void string(const std::string& field, std::string& out) {
    if (const json* v = find(field)) {
      if (!v->is_string()) fail(field, "expected a string");
      out = v->get<std::string>();
    }
  }

  void unsigned_list(const std::string& field, std::vector<std::uint64_t>& out) {
    if (const json* v = find(field)) {
      if (!v->is_array()) fail(field, "expected an array of non-negative integers");
      out.clear();
      for (const json& e : *v) {
        if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<long long>() >= 0)) {
          fail(field, "expected an array of non-negative integers");
        }
        out.push_back(e.get<std::uint64_t>());
      }
    }
  }

  void int_list(const std::string& field, std::vector<int>& out) {
    if (const json* v = find(field)) {
      if (!v->is_array()) fail(field, "expected an array of integers");
      out.clear();
      for (const json& e : *v) {
        if (!e.is_number_integer()) fail(field, "expected an array of integers");
        out.push_back(e.get<int>());
      }
    }
  }

  void number_list(const std::string& field, std::vector<double>& out) {
    if (const json* v = find(field)) {
      if (!v->is_array()) fail(field, "expected an array of numbers");
      out.clear();
      for (const json& e : *v) {
        if (!e.is_number()) fail(field, "expected an array of numbers");
        out.push_back(e.get<double>());
      }
    }
  }

  void pair_table(const std::string& field, PairTable& out) {
    if (const json* v = find(field)) {
      const bool shape = v->is_array() && v->size() == 2 && (*v)[0].is_array() &&
                         (*v)[1].is_array() && (*v)[0].size() == 2 && (*v)[1].size() == 2;
      if (!shape) fail(field, "expected a 2x2 array of numbers");
      for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
          if (!(*v)[a][b].is_number()) fail(field, "expected a 2x2 array of numbers");
          out[a][b] = (*v)[a][b].get<double>();
        }
      }
    }
  }

  Reader child(const std::string& field) {
    const json* v = find(field);
    if (!v) fail(field, "missing");
    return Reader(*v, where(field));
  }

  bool has(const std::string& field) const { return j_.contains(field); }

  void finish() const {
    for (const auto& [k, _] : j_.items()) {
      if (!used_.count(k)) fail(k, "unknown field");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> used_;
};

const char* boundary_name(Boundary b) { return b == Boundary::open ? "open" : "periodic"; }

const char* kind_name(DisorderKind k) {
  switch (k) {
    case DisorderKind::none: return "none";
    case DisorderKind::binary_alloy: return "binary_alloy";
    case DisorderKind::structural: return "structural";
    case DisorderKind::magnetic: return "magnetic";
  }
  return "none";
}

void read_lattice(Reader r, LatticeSpec& l) {
  r.integer("dimension", l.dimension);
  r.int_list("extents", l.extents);
  r.number("lattice_constant", l.lattice_constant);
  std::string boundary = boundary_name(l.boundary);
  r.string("boundary", boundary);
  if (boundary == "open") {
    l.boundary = Boundary::open;
  } else if (boundary == "periodic") {
    l.boundary = Boundary::periodic;
  } else {
    r.fail("boundary", "expected \"open\" or \"periodic\"");
  }
  r.number("cutoff", l.cutoff);
  r.integer("max_sparsity", l.max_sparsity);
  r.finish();
}

void read_disorder(Reader r, DisorderSpec& d) {
  std::string kind = kind_name(d.kind);
  r.string("kind", kind);
  if (kind == "none") {
    d.kind = DisorderKind::none;
  } else if (kind == "binary_alloy") {
    d.kind = DisorderKind::binary_alloy;
  } else if (kind == "structural") {
    d.kind = DisorderKind::structural;
  } else if (kind == "magnetic") {
    d.kind = DisorderKind::magnetic;
  } else {
    r.fail("kind", "expected none, binary_alloy, structural or magnetic");
  }
  r.number("alloy_probability", d.alloy_probability);
  r.pair_table("hopping", d.hopping);
  r.pair_table("decay", d.decay);
  r.integer("displacement_bits", d.displacement_bits);
  r.number("displacement_width", d.displacement_width);
  r.integer("precision_bits", d.precision_bits);
  r.number("max_distance", d.max_distance);
  std::string mode = d.randomness.mode == RandomMode::keyed_hash ? "keyed_hash" : "kwise_polynomial";
  r.string("random_mode", mode);
  if (mode == "keyed_hash") {
    d.randomness.mode = RandomMode::keyed_hash;
  } else if (mode == "kwise_polynomial") {
    d.randomness.mode = RandomMode::kwise_polynomial;
  } else {
    r.fail("random_mode", "expected keyed_hash or kwise_polynomial");
  }
  r.integer("independence", d.randomness.independence);
  r.finish();
}

void read_parameters(Reader r, TaskParameters& p) {
  r.number("beta", p.beta);
  r.number("mu", p.mu);
  r.number("eta", p.eta);
  r.number("eps", p.eps);
  r.number("delta", p.delta);
  r.number_list("omega", p.omega);
  r.unsigned_list("sites", p.sites);
  r.integer("probes", p.probes);
  r.integer("nodes", p.nodes);
  r.number("cell_volume", p.cell_volume);
  r.integer("max_degree", p.max_degree);
  r.string("circuit", p.circuit);
  r.integer("random_circuits", p.random_circuits);
  r.integer("circuit_qubits", p.circuit_qubits);
  r.integer("circuit_depth", p.circuit_depth);
  r.integer("bench_dimension", p.bench_dimension);
  r.int_list("degrees", p.degrees);
  r.integer("extent", p.extent);
  r.integer("repetitions", p.repetitions);
  r.finish();

  auto require = [&](bool ok, const char* field, const char* what) {
    if (!ok) r.fail(field, what);
  };
  require(p.beta >= 0.0, "beta", "must be non-negative");
  require(p.eta > 0.0, "eta", "must be positive");
  require(p.eps > 0.0 && p.eps < 1.0, "eps", "must lie in (0, 1)");
  require(p.delta > 0.0 && p.delta < 1.0, "delta", "must lie in (0, 1)");
  require(!p.omega.empty(), "omega", "needs at least one frequency");
  require(p.probes >= 0, "probes", "must be non-negative");
  require(p.nodes >= 0, "nodes", "must be non-negative");
  require(p.cell_volume > 0.0, "cell_volume", "must be positive");
  require(p.max_degree >= 0 && p.max_degree <= 32, "max_degree", "must lie in 0..32");
  require(p.random_circuits >= 0, "random_circuits", "must be non-negative");
  require(p.circuit_qubits >= 1 && p.circuit_qubits <= 6, "circuit_qubits", "must lie in 1..6");
  require(p.circuit_depth >= 1 && p.circuit_depth <= 8, "circuit_depth", "must lie in 1..8");
  require(p.bench_dimension >= 1 && p.bench_dimension <= 3, "bench_dimension", "must be 1, 2 or 3");
  require(p.extent >= 0, "extent", "must be non-negative");
  require(p.repetitions >= 1, "repetitions", "must be positive");
  for (int d : p.degrees) require(d >= 1, "degrees", "entries must be positive");
}

json to_json(const ExperimentConfig& c) {
  const LatticeSpec& l = c.lattice;
  const DisorderSpec& d = c.disorder;
  const TaskParameters& p = c.parameters;
  json j;
  j["schema_version"] = c.schema_version;
  j["task"] = to_string(c.task);
  j["model"]["lattice"] = {{"dimension", l.dimension},
                           {"extents", l.extents},
                           {"lattice_constant", l.lattice_constant},
                           {"boundary", boundary_name(l.boundary)},
                           {"cutoff", l.cutoff},
                           {"max_sparsity", l.max_sparsity}};
  auto table = [](const PairTable& t) {
    return json::array({json::array({t[0][0], t[0][1]}), json::array({t[1][0], t[1][1]})});
  };
  j["model"]["disorder"] = {
      {"kind", kind_name(d.kind)},
      {"alloy_probability", d.alloy_probability},
      {"hopping", table(d.hopping)},
      {"decay", table(d.decay)},
      {"displacement_bits", d.displacement_bits},
      {"displacement_width", d.displacement_width},
      {"precision_bits", d.precision_bits},
      {"max_distance", d.max_distance},
      {"random_mode", d.randomness.mode == RandomMode::keyed_hash ? "keyed_hash" : "kwise_polynomial"},
      {"independence", d.randomness.independence}};
  j["parameters"] = {{"beta", p.beta},
                     {"mu", p.mu},
                     {"eta", p.eta},
                     {"eps", p.eps},
                     {"delta", p.delta},
                     {"omega", p.omega},
                     {"sites", p.sites},
                     {"probes", p.probes},
                     {"nodes", p.nodes},
                     {"cell_volume", p.cell_volume},
                     {"max_degree", p.max_degree},
                     {"circuit", p.circuit},
                     {"random_circuits", p.random_circuits},
                     {"circuit_qubits", p.circuit_qubits},
                     {"circuit_depth", p.circuit_depth},
                     {"bench_dimension", p.bench_dimension},
                     {"degrees", p.degrees},
                     {"extent", p.extent},
                     {"repetitions", p.repetitions}};
  j["output"] = c.output;
  j["keys"] = c.keys;
  return j;
}

}  // namespace

std::string to_string(Task t) {
  switch (t) {
    case Task::rdm: return "rdm";
    case Task::ldos: return "ldos";
    case Task::momentum_ldos: return "momentum-ldos";
    case Task::greens: return "greens";
    case Task::conductivity: return "conductivity";
    case Task::bqp_check: return "bqp-check";
    case Task::benchmark: return "benchmark";
    case Task::verify_encoding: return "verify-encoding";
  }
  return "?";
}

Task task_from_string(const std::string& s) {
  for (Task t : {Task::rdm, Task::ldos, Task::momentum_ldos, Task::greens, Task::conductivity,
                 Task::bqp_check, Task::benchmark, Task::verify_encoding}) {
    if (to_string(t) == s) return t;
  }
  throw ConfigError("task: unknown task '" + s + "'");
}

ExperimentConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
    throw ConfigError("line " + std::to_string(line) + ": invalid JSON (" + e.what() + ")");
  }
  ExperimentConfig c;
  Reader r(j, "");
  r.integer("schema_version", c.schema_version);
  if (!r.has("schema_version")) r.fail("schema_version", "missing");
  if (c.schema_version != kSchemaVersion) {
    r.fail("schema_version", "unsupported version " + std::to_string(c.schema_version) +
                                 " (expected " + std::to_string(kSchemaVersion) + ")");
  }
  std::string task;
  r.string("task", task);
  if (task.empty()) r.fail("task", "missing");
  c.task = task_from_string(task);
  if (r.has("model")) {
    Reader model = r.child("model");
    if (model.has("lattice")) read_lattice(model.child("lattice"), c.lattice);
    if (model.has("disorder")) read_disorder(model.child("disorder"), c.disorder);
    model.finish();
  } else if (c.task != Task::bqp_check && c.task != Task::benchmark) {
    r.fail("model", "missing");
  }
  if (r.has("parameters")) read_parameters(r.child("parameters"), c.parameters);
  r.string("output", c.output);
  r.unsigned_list("keys", c.keys);
  if (c.keys.empty()) r.fail("keys", "needs at least one key");
  r.finish();

  if (c.task != Task::bqp_check && c.task != Task::benchmark) {
    validate(c.lattice);
    validate(c.disorder, Lattice(c.lattice));
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string resolved_config_json(const ExperimentConfig& c) { return to_json(c).dump(2); }

std::string config_hash(const ExperimentConfig& c) {
  const std::string text = resolved_config_json(c);
  unsigned char digest[16];
  crypto_generichash(digest, sizeof digest, reinterpret_cast<const unsigned char*>(text.data()),
                     text.size(), nullptr, 0);
  std::ostringstream out;
  for (unsigned char b : digest) out << std::hex << std::setw(2) << std::setfill('0') << int{b};
  return out.str();
}

}  // namespace disqla
