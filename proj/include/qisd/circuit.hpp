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

#pragma once

#include <string>
#include <vector>

#include "qisd/gates.hpp"

namespace qisd {

/// Circuit of alternating layers: per-qubit single-qubit gates, or a named
/// two-qubit instruction on a target pair. Layers apply in list order.
/// In a local layer, an exact identity matrix means "no gate on this qubit"
/// (noise models skip such slots).
struct GateCircuit {
  struct Layer {
    enum class Kind { Local, TwoQubit };
    Kind kind = Kind::Local;
    std::vector<Matrix2> gates;  // Local: one entry per qubit
    std::string name;            // TwoQubit instruction name
    int t0 = 0, t1 = 1;          // TwoQubit targets
  };

  int qubits = 2;
  std::vector<Layer> layers;

  /// Append a local layer acting on all qubits (identity padding).
  void add_local(const std::vector<Matrix2>& gates);
  /// Append a local layer acting on two qubits only.
  void add_local_pair(int q0, const Matrix2& g0, int q1, const Matrix2& g1);
  void add_two_qubit(const std::string& name, int t0, int t1);

  int count_two_qubit(const std::string& name) const;
  int count_two_qubit() const;

  /// JSON schema:
  /// {"qubits": n, "layers": [{"type":"local","gates":[[[re,im],...],...]}
  ///                          |{"type":"two_qubit","name":"SQiSW",
  ///                            "targets":[i,j]}]}
  std::string to_json() const;
  static GateCircuit from_json(const std::string& text);
};

/// Full unitary of the circuit, first layer applied first. Guarded at 12
/// qubits; throws std::invalid_argument("too large") beyond.
MatrixX circuit_to_unitary(const GateCircuit& c);

/// Apply the circuit to |0...0> (or a given state) without forming the
/// full unitary. Guarded at 12 qubits.
VectorX apply_circuit(const GateCircuit& c);
VectorX apply_circuit(const GateCircuit& c, VectorX state);

/// Unitary of a named two-qubit instruction embedded on (t0, t1) of n
/// qubits; qubit 0 is the most significant bit of the basis index.
MatrixX embed_two_qubit(const Matrix4& u, int n, int t0, int t1);

/// In-place gate application on a statevector (qubit 0 = MSB).
void apply_one_qubit_gate(VectorX& state, const Matrix2& u, int n, int q);
void apply_two_qubit_gate(VectorX& state, const Matrix4& u, int n, int t0,
                          int t1);

/// Append `block` (a two-qubit circuit) onto qubits (a, b) of `big`.
void append_embedded(GateCircuit& big, const GateCircuit& block, int a, int b);

}  // namespace qisd
