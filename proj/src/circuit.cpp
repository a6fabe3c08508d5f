// Copyright 2026 The qisd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qisd/circuit.hpp"

#include <json.hpp>
#include <stdexcept>

namespace qisd {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

json matrix2_to_json(const Matrix2& m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 2; ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix2 matrix2_from_json(const json& j) {
  Matrix2 m;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) m(i, k) = complex_from_json(j.at(i).at(k));
  return m;
}

void check_targets(int qubits, int t0, int t1) {
  if (t0 < 0 || t1 < 0 || t0 >= qubits || t1 >= qubits || t0 == t1)
    throw std::invalid_argument("invalid target pair");
}

}  // namespace

void GateCircuit::add_local(const std::vector<Matrix2>& gates) {
  if (static_cast<int>(gates.size()) != qubits)
    throw std::invalid_argument("local layer size mismatch");
  Layer l;
  l.kind = Layer::Kind::Local;
  l.gates = gates;
  layers.push_back(std::move(l));
}

void GateCircuit::add_local_pair(int q0, const Matrix2& g0, int q1,
                                 const Matrix2& g1) {
  check_targets(qubits, q0, q1);
  std::vector<Matrix2> gates(qubits, Matrix2::Identity());
  gates[q0] = g0;
  gates[q1] = g1;
  add_local(gates);
}

void GateCircuit::add_two_qubit(const std::string& name, int t0, int t1) {
  check_targets(qubits, t0, t1);
  named_gate(name);  // validate name
  Layer l;
  l.kind = Layer::Kind::TwoQubit;
  l.name = name;
  l.t0 = t0;
  l.t1 = t1;
  layers.push_back(std::move(l));
}

int GateCircuit::count_two_qubit(const std::string& name) const {
  int n = 0;
  for (const auto& l : layers)
    if (l.kind == Layer::Kind::TwoQubit && l.name == name) ++n;
  return n;
}

int GateCircuit::count_two_qubit() const {
  int n = 0;
  for (const auto& l : layers)
    if (l.kind == Layer::Kind::TwoQubit) ++n;
  return n;
}

std::string GateCircuit::to_json() const {
  json out;
  out["qubits"] = qubits;
  json jl = json::array();
  for (const auto& l : layers) {
    json e;
    if (l.kind == Layer::Kind::Local) {
      e["type"] = "local";
      json g = json::array();
      for (const auto& m : l.gates) g.push_back(matrix2_to_json(m));
      e["gates"] = g;
    } else {
      e["type"] = "two_qubit";
      e["name"] = l.name;
      e["targets"] = json::array({l.t0, l.t1});
    }
    jl.push_back(e);
  }
  out["layers"] = jl;
  return out.dump();
}

GateCircuit GateCircuit::from_json(const std::string& text) {
  const json j = json::parse(text);
  GateCircuit c;
  c.qubits = j.at("qubits").get<int>();
  if (c.qubits < 1) throw std::invalid_argument("qubits must be positive");
  for (const auto& e : j.at("layers")) {
    const std::string type = e.at("type").get<std::string>();
    if (type == "local") {
      std::vector<Matrix2> gates;
      for (const auto& g : e.at("gates")) gates.push_back(matrix2_from_json(g));
      c.add_local(gates);
    } else if (type == "two_qubit") {
      c.add_two_qubit(e.at("name").get<std::string>(),
                      e.at("targets").at(0).get<int>(),
                      e.at("targets").at(1).get<int>());
    } else {
      throw std::invalid_argument("unknown layer type: " + type);
    }
  }
  return c;
}

MatrixX embed_two_qubit(const Matrix4& u, int n, int t0, int t1) {
  check_targets(n, t0, t1);
  const Eigen::Index dim = Eigen::Index(1) << n;
  MatrixX out = MatrixX::Zero(dim, dim);
  const int s0 = n - 1 - t0, s1 = n - 1 - t1;  // bit shifts, qubit 0 is MSB
  for (Eigen::Index col = 0; col < dim; ++col) {
    const int b0 = (col >> s0) & 1, b1 = (col >> s1) & 1;
    const Eigen::Index base = col & ~((Eigen::Index(1) << s0) | (Eigen::Index(1) << s1));
    for (int r0 = 0; r0 < 2; ++r0)
      for (int r1 = 0; r1 < 2; ++r1) {
        const Complex amp = u(2 * r0 + r1, 2 * b0 + b1);
        if (amp == Complex(0, 0)) continue;
        const Eigen::Index row =
            base | (Eigen::Index(r0) << s0) | (Eigen::Index(r1) << s1);
        out(row, col) += amp;
      }
  }
  return out;
}

namespace {

void guard_size(int n) {
  if (n > 12) throw std::invalid_argument("too large");
}

}  // namespace

void apply_one_qubit_gate(VectorX& state, const Matrix2& g, int n, int q) {
  const Eigen::Index stride = Eigen::Index(1) << (n - 1 - q);
  for (Eigen::Index base = 0; base < state.size(); ++base) {
    if (base & stride) continue;
    const Complex a = state(base), b = state(base | stride);
    state(base) = g(0, 0) * a + g(0, 1) * b;
    state(base | stride) = g(1, 0) * a + g(1, 1) * b;
  }
}

void apply_two_qubit_gate(VectorX& state, const Matrix4& u, int n, int t0,
                          int t1) {
  check_targets(n, t0, t1);
  const Eigen::Index s0 = Eigen::Index(1) << (n - 1 - t0);
  const Eigen::Index s1 = Eigen::Index(1) << (n - 1 - t1);
  for (Eigen::Index base = 0; base < state.size(); ++base) {
    if ((base & s0) || (base & s1)) continue;
    Eigen::Vector4cd v;
    v << state(base), state(base | s1), state(base | s0), state(base | s0 | s1);
    v = u * v;
    state(base) = v(0);
    state(base | s1) = v(1);
    state(base | s0) = v(2);
    state(base | s0 | s1) = v(3);
  }
}

void append_embedded(GateCircuit& big, const GateCircuit& block, int a, int b) {
  if (block.qubits != 2) throw std::invalid_argument("block must be 2-qubit");
  for (const auto& l : block.layers) {
    if (l.kind == GateCircuit::Layer::Kind::Local) {
      big.add_local_pair(a, l.gates[0], b, l.gates[1]);
    } else {
      const int t0 = l.t0 == 0 ? a : b;
      const int t1 = l.t1 == 0 ? a : b;
      big.add_two_qubit(l.name, t0, t1);
    }
  }
}

VectorX apply_circuit(const GateCircuit& c, VectorX state) {
  guard_size(c.qubits);
  const Eigen::Index dim = Eigen::Index(1) << c.qubits;
  if (state.size() != dim) throw std::invalid_argument("state size mismatch");
  for (const auto& l : c.layers) {
    if (l.kind == GateCircuit::Layer::Kind::Local) {
      for (int q = 0; q < c.qubits; ++q)
        if (!l.gates[q].isIdentity(0.0))
          apply_one_qubit_gate(state, l.gates[q], c.qubits, q);
    } else {
      apply_two_qubit_gate(state, named_gate(l.name), c.qubits, l.t0, l.t1);
    }
  }
  return state;
}

VectorX apply_circuit(const GateCircuit& c) {
  guard_size(c.qubits);
  VectorX state = VectorX::Zero(Eigen::Index(1) << c.qubits);
  state(0) = 1.0;
  return apply_circuit(c, std::move(state));
}

MatrixX circuit_to_unitary(const GateCircuit& c) {
  guard_size(c.qubits);
  const Eigen::Index dim = Eigen::Index(1) << c.qubits;
  MatrixX u = MatrixX::Identity(dim, dim);
  for (const auto& l : c.layers) {
    if (l.kind == GateCircuit::Layer::Kind::Local) {
      MatrixX layer = MatrixX::Identity(1, 1);
      for (int q = 0; q < c.qubits; ++q) layer = kron(layer, l.gates[q]);
      u = layer * u;
    } else {
      u = embed_two_qubit(named_gate(l.name), c.qubits, l.t0, l.t1) * u;
    }
  }
  return u;
}

}  // namespace qisd
