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

#include "disqla/clock.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "disqla/errors.hpp"

namespace disqla {

namespace {

constexpr double kUnitaryTol = 1e-12;

Matrix from_rows(std::initializer_list<Complex> values, int dim) {
  Matrix m(dim, dim);
  auto it = values.begin();
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = *it++;
  }
  return m;
}

int bit_position(int wire, int qubits) { return qubits - 1 - wire; }

std::string line_error(int line, const std::string& what) {
  return "circuit line " + std::to_string(line) + ": " + what;
}

}  // namespace

std::uint64_t GateCircuit::input_index() const {
  std::uint64_t x = 0;
  for (int b : input) x = (x << 1) | static_cast<std::uint64_t>(b);
  return x << (qubits - static_cast<int>(input.size()));
}

void GateCircuit::validate() const {
  if (qubits < 1 || qubits > 12) throw ContractViolation("circuit needs 1..12 qubits");
  if (static_cast<int>(input.size()) > qubits) {
    throw ContractViolation("input string longer than the register");
  }
  for (int b : input) {
    if (b != 0 && b != 1) throw ContractViolation("input bits must be 0 or 1");
  }
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const LocalGate& g = gates[k];
    const auto arity = g.wires.size();
    if (arity < 1 || arity > 2) {
      throw ContractViolation("gate " + std::to_string(k) + " acts on " +
                              std::to_string(arity) + " wires");
    }
    for (int w : g.wires) {
      if (w < 0 || w >= qubits) throw ContractViolation("gate " + std::to_string(k) + " wire out of range");
    }
    if (arity == 2 && g.wires[0] == g.wires[1]) {
      throw ContractViolation("gate " + std::to_string(k) + " repeats a wire");
    }
    const auto dim = Eigen::Index{1} << arity;
    if (g.unitary.rows() != dim || g.unitary.cols() != dim) {
      throw ContractViolation("gate " + std::to_string(k) + " matrix has the wrong size");
    }
    const double defect =
        (g.unitary.adjoint() * g.unitary - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (defect > kUnitaryTol) {
      throw ContractViolation("gate " + std::to_string(k) + " (" + g.name +
                              ") is not unitary: defect " + std::to_string(defect));
    }
  }
}

LocalGate named_gate(const std::string& name, std::vector<int> wires) {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  Matrix u;
  int arity = 1;
  if (name == "I") {
    u = Matrix::Identity(2, 2);
  } else if (name == "X") {
    u = from_rows({0, 1, 1, 0}, 2);
  } else if (name == "Y") {
    u = from_rows({0, -i, i, 0}, 2);
  } else if (name == "Z") {
    u = from_rows({1, 0, 0, -1}, 2);
  } else if (name == "H") {
    u = from_rows({r, r, r, -r}, 2);
  } else if (name == "S") {
    u = from_rows({1, 0, 0, i}, 2);
  } else if (name == "T") {
    u = from_rows({1, 0, 0, std::polar(1.0, std::numbers::pi / 4)}, 2);
  } else if (name == "CNOT") {
    u = from_rows({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}, 4);
    arity = 2;
  } else if (name == "CZ") {
    u = from_rows({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1}, 4);
    arity = 2;
  } else if (name == "SWAP") {
    u = from_rows({1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1}, 4);
    arity = 2;
  } else {
    throw ConfigError("unknown gate '" + name + "'");
  }
  if (static_cast<int>(wires.size()) != arity) {
    throw ConfigError("gate " + name + " takes " + std::to_string(arity) + " wire(s)");
  }
  return LocalGate{name, std::move(wires), std::move(u)};
}

GateCircuit parse_gate_circuit(std::istream& in) {
  GateCircuit c;
  bool have_qubits = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string word;
    if (!(ls >> word)) continue;
    std::vector<std::string> args;
    for (std::string a; ls >> a;) args.push_back(a);
    auto number = [&](const std::string& s) {
      try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        throw ConfigError(line_error(line, "expected a number, got '" + s + "'"));
      }
    };
    auto wire = [&](const std::string& s) {
      const double v = number(s);
      if (v != std::floor(v) || v < 0 || v >= c.qubits) {
        throw ConfigError(line_error(line, "wire '" + s + "' outside 0.." +
                                               std::to_string(c.qubits - 1)));
      }
      return static_cast<int>(v);
    };
    if (word == "qubits") {
      if (args.size() != 1) throw ConfigError(line_error(line, "qubits takes one value"));
      const double r = number(args[0]);
      if (r != std::floor(r) || r < 1 || r > 12) {
        throw ConfigError(line_error(line, "qubit count must be an integer in 1..12"));
      }
      c.qubits = static_cast<int>(r);
      have_qubits = true;
      continue;
    }
    if (!have_qubits) throw ConfigError(line_error(line, "'qubits' must come first"));
    if (word == "input") {
      if (args.size() != 1) throw ConfigError(line_error(line, "input takes one bit string"));
      c.input.clear();
      for (char ch : args[0]) {
        if (ch != '0' && ch != '1') throw ConfigError(line_error(line, "input must be a bit string"));
        c.input.push_back(ch - '0');
      }
      if (static_cast<int>(c.input.size()) > c.qubits) {
        throw ConfigError(line_error(line, "input longer than the register"));
      }
      continue;
    }
    if (word == "U1" || word == "U2") {
      const int dim = word == "U1" ? 2 : 4;
      const std::size_t reals = static_cast<std::size_t>(2 * dim * dim);
      const std::size_t arity = word == "U1" ? 1 : 2;
      if (args.size() != reals + arity) {
        throw ConfigError(line_error(line, word + " takes " + std::to_string(reals) +
                                               " reals and " + std::to_string(arity) + " wire(s)"));
      }
      Matrix u(dim, dim);
      for (int k = 0; k < dim * dim; ++k) {
        u(k / dim, k % dim) = Complex{number(args[static_cast<std::size_t>(2 * k)]),
                                      number(args[static_cast<std::size_t>(2 * k + 1)])};
      }
      std::vector<int> wires;
      for (std::size_t k = reals; k < args.size(); ++k) wires.push_back(wire(args[k]));
      c.gates.push_back(LocalGate{word, std::move(wires), std::move(u)});
    } else {
      std::vector<int> wires;
      for (const auto& a : args) wires.push_back(wire(a));
      try {
        c.gates.push_back(named_gate(word, std::move(wires)));
      } catch (const ConfigError& e) {
        throw ConfigError(line_error(line, e.what()));
      }
    }
  }
  if (!have_qubits) throw ConfigError("circuit: missing 'qubits' line");
  try {
    c.validate();
  } catch (const ContractViolation& e) {
    throw ConfigError(std::string("circuit: ") + e.what());
  }
  return c;
}

void write_gate_circuit(std::ostream& out, const GateCircuit& c) {
  out << "qubits " << c.qubits << '\n';
  if (!c.input.empty()) {
    out << "input ";
    for (int b : c.input) out << b;
    out << '\n';
  }
  out << std::setprecision(17);
  for (const LocalGate& g : c.gates) {
    out << (g.wires.size() == 1 ? "U1" : "U2");
    for (Eigen::Index i = 0; i < g.unitary.rows(); ++i) {
      for (Eigen::Index j = 0; j < g.unitary.cols(); ++j) {
        out << ' ' << g.unitary(i, j).real() << ' ' << g.unitary(i, j).imag();
      }
    }
    for (int w : g.wires) out << ' ' << w;
    out << '\n';
  }
}

Matrix embed_gate(const LocalGate& g, int qubits) {
  const auto dim = Eigen::Index{1} << qubits;
  Matrix full = Matrix::Zero(dim, dim);
  std::vector<int> pos;
  for (int w : g.wires) pos.push_back(bit_position(w, qubits));
  const auto local_dim = Eigen::Index{1} << pos.size();
  auto local_of = [&](Eigen::Index idx) {
    Eigen::Index l = 0;
    for (int p : pos) l = (l << 1) | ((idx >> p) & 1);
    return l;
  };
  auto with_local = [&](Eigen::Index idx, Eigen::Index l) {
    for (std::size_t k = 0; k < pos.size(); ++k) {
      const int p = pos[k];
      const Eigen::Index b = (l >> (pos.size() - 1 - k)) & 1;
      idx = (idx & ~(Eigen::Index{1} << p)) | (b << p);
    }
    return idx;
  };
  for (Eigen::Index col = 0; col < dim; ++col) {
    const Eigen::Index lin = local_of(col);
    for (Eigen::Index lout = 0; lout < local_dim; ++lout) {
      const Complex v = g.unitary(lout, lin);
      if (v != Complex{}) full(with_local(col, lout), col) = v;
    }
  }
  return full;
}

Matrix circuit_unitary(const GateCircuit& c) {
  const auto dim = Eigen::Index{1} << c.qubits;
  Matrix u = Matrix::Identity(dim, dim);
  for (const LocalGate& g : c.gates) u = embed_gate(g, c.qubits) * u;
  return u;
}

double output_probability(const GateCircuit& c) {
  const Matrix u = circuit_unitary(c);
  const auto col = static_cast<Eigen::Index>(c.input_index());
  const Eigen::Index half = u.rows() / 2;
  return u.col(col).tail(half).squaredNorm();
}

std::vector<LocalGate> extend_circuit(const GateCircuit& c) {
  if (c.gates.empty()) throw ContractViolation("extend_circuit needs T >= 1");
  std::vector<LocalGate> v = c.gates;
  v.push_back(named_gate("Z", {0}));
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    v.push_back(LocalGate{it->name + "^dag", it->wires, it->unitary.adjoint()});
  }
  return v;
}

ClockConstruction clock_unitary(const std::vector<LocalGate>& v, int work_qubits, int max_qubits) {
  const int period = static_cast<int>(v.size());
  if (period % 2 == 0) throw ContractViolation("clock period M must be odd");
  ClockConstruction cc;
  cc.work_qubits = work_qubits;
  cc.period = period;
  cc.clock_qubits = static_cast<int>(std::floor(std::log2(period))) + 1;
  if (cc.clock_qubits + work_qubits > max_qubits) {
    throw SizeError("clock construction needs " + std::to_string(cc.clock_qubits + work_qubits) +
                    " qubits, above the dense cap of " + std::to_string(max_qubits));
  }
  const auto wdim = Eigen::Index{1} << work_qubits;
  const auto dim = wdim << cc.clock_qubits;
  cc.w = Matrix::Zero(dim, dim);
  cc.sparse_gate_set = true;
  for (int l = 0; l < period; ++l) {
    const LocalGate& g = v[static_cast<std::size_t>(l)];
    for (Eigen::Index i = 0; i < g.unitary.rows(); ++i) {
      if ((g.unitary.row(i).array() != Complex{}).count() > 2) cc.sparse_gate_set = false;
    }
    const int next = (l + 1) % period;
    cc.w.block(next * wdim, l * wdim, wdim, wdim) = embed_gate(g, work_qubits);
  }
  for (Eigen::Index k = period * wdim; k < dim; ++k) cc.w(k, k) = 1.0;
  cc.h = 0.5 * (cc.w + cc.w.adjoint());
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto nnz = (cc.h.row(i).array().abs() > 1e-15).count();
    cc.max_row_nonzeros = std::max(cc.max_row_nonzeros, static_cast<int>(nnz));
  }
  return cc;
}

std::vector<double> active_spectrum(const ClockConstruction& cc) {
  const auto n = static_cast<Eigen::Index>(cc.period) << cc.work_qubits;
  Eigen::SelfAdjointEigenSolver<Matrix> es(cc.h.topLeftCorner(n, n), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> expected_spectrum(int period, int work_qubits) {
  std::vector<double> out;
  const std::size_t mult = std::size_t{1} << (work_qubits - 1);
  for (int l = 0; l < period; ++l) {
    for (std::size_t k = 0; k < mult; ++k) {
      out.push_back(std::cos(2.0 * std::numbers::pi * l / period));
      out.push_back(std::cos(std::numbers::pi * (2 * l + 1) / period));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "YES";
    case Verdict::no: return "NO";
    case Verdict::promise_violated: return "promise violated";
  }
  return "?";
}

DecisionReport ldos_decision(const ClockConstruction& cc, const GateCircuit& c) {
  const int depth = c.depth();
  const int m = cc.period;
  if (m != 2 * depth + 1 || cc.work_qubits != c.qubits) {
    throw ContractViolation("clock construction does not belong to this circuit");
  }
  const double pi = std::numbers::pi;
  DecisionReport r;
  r.omega = (depth % 2 == 0 ? -1.0 : 1.0) * std::cos(pi * depth / m);
  r.c = 1.0 / std::sqrt(4.0 * m);
  r.eta = r.c * pi / (2.0 * m);
  const double eps = 1.0 / (6.0 * m);
  r.yes_threshold = 1.0 / m + eps;
  r.no_threshold = 1.0 / m - eps;
  r.index = cc.index(0, c.input_index());

  const auto f = [&](double x) {
    return r.eta * r.eta / ((r.omega - x) * (r.omega - x) + r.eta * r.eta);
  };
  Eigen::SelfAdjointEigenSolver<Matrix> es(cc.h);
  const auto j = static_cast<Eigen::Index>(r.index);
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    r.value += std::norm(es.eigenvectors()(j, k)) * f(es.eigenvalues()(k));
  }
  r.margin = std::abs(r.value - 1.0 / m);
  if (r.value >= r.yes_threshold) {
    r.verdict = Verdict::yes;
  } else if (r.value <= r.no_threshold) {
    r.verdict = Verdict::no;
  } else {
    r.verdict = Verdict::promise_violated;
  }

  r.output_probability = output_probability(c);
  r.s_plus = f(1.0);
  r.s_minus = f(-1.0);
  for (int l = 1; l <= (m - 1) / 2; ++l) {
    const double x = std::cos(2.0 * pi * l / m);
    r.s_plus += 2.0 * f(x);
    r.s_minus += 2.0 * f(-x);
  }
  r.predicted = r.s_plus / m + r.output_probability * (r.s_minus - r.s_plus) / m;
  return r;
}

DecisionReport ldos_decision(const GateCircuit& c) {
  c.validate();
  return ldos_decision(clock_unitary(extend_circuit(c), c.qubits), c);
}

Matrix haar_unitary(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Matrix z(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) z(i, j) = Complex{g(rng), g(rng)} / std::sqrt(2.0);
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix rr = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const Complex d = rr(k, k);
    q.col(k) *= std::abs(d) > 0.0 ? d / std::abs(d) : Complex{1.0};
  }
  // Re-orthonormalize so the 1e-12 unitarity contract holds comfortably.
  Eigen::JacobiSVD<Matrix> svd(q, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

GateCircuit random_circuit(int qubits, int depth, int input_bits, std::uint64_t seed) {
  if (input_bits > qubits) throw ContractViolation("input bits exceed the register");
  std::mt19937_64 rng(seed);
  GateCircuit c;
  c.qubits = qubits;
  for (int b = 0; b < input_bits; ++b) c.input.push_back(static_cast<int>(rng() & 1));
  std::uniform_int_distribution<int> pick(0, qubits - 1);
  for (int t = 0; t < depth; ++t) {
    const bool two = qubits >= 2 && (rng() & 1);
    std::vector<int> wires{pick(rng)};
    if (two) {
      int b = pick(rng);
      while (b == wires[0]) b = pick(rng);
      wires.push_back(b);
    }
    const int dim = two ? 4 : 2;
    c.gates.push_back(LocalGate{two ? "U2" : "U1", std::move(wires), haar_unitary(dim, rng())});
  }
  return c;
}

}  // namespace disqla
