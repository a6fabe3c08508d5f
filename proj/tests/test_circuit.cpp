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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qisd/circuit.hpp"
#include "qisd/rng.hpp"

using namespace qisd;

TEST_CASE("empty circuit is the identity") {
  GateCircuit c;
  c.qubits = 3;
  CHECK((circuit_to_unitary(c) - MatrixX::Identity(8, 8)).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("two SQiSW equal iSWAP") {
  GateCircuit c;
  c.qubits = 2;
  c.add_two_qubit("SQiSW", 0, 1);
  c.add_two_qubit("SQiSW", 0, 1);
  CHECK((circuit_to_unitary(c) - MatrixX(named_gate("iSWAP")))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("embedding matches kron for adjacent and reversed targets") {
  RngStream rng(2);
  const Matrix2 a = haar_su2(rng), b = haar_su2(rng);
  GateCircuit c;
  c.qubits = 2;
  c.add_local({a, b});
  CHECK((circuit_to_unitary(c) - MatrixX(kron2(a, b))).cwiseAbs().maxCoeff() <
        1e-12);
  // CNOT with reversed targets on 2 qubits = SWAP CNOT SWAP
  GateCircuit r;
  r.qubits = 2;
  r.add_two_qubit("CNOT", 1, 0);
  const Matrix4 sw = named_gate("SWAP");
  CHECK((circuit_to_unitary(r) - MatrixX(sw * named_gate("CNOT") * sw))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("apply_circuit agrees with the full unitary") {
  RngStream rng(3);
  GateCircuit c;
  c.qubits = 3;
  c.add_local({haar_su2(rng), haar_su2(rng), haar_su2(rng)});
  c.add_two_qubit("SQiSW", 0, 2);
  c.add_local({haar_su2(rng), haar_su2(rng), haar_su2(rng)});
  c.add_two_qubit("CNOT", 2, 1);
  const MatrixX u = circuit_to_unitary(c);
  const VectorX direct = apply_circuit(c);
  VectorX expect = VectorX::Zero(8);
  expect(0) = 1;
  expect = u * expect;
  CHECK((direct - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("size guard") {
  GateCircuit c;
  c.qubits = 13;
  CHECK_THROWS_WITH_AS(circuit_to_unitary(c), "too large",
                       std::invalid_argument);
}

TEST_CASE("target validation") {
  GateCircuit c;
  c.qubits = 2;
  CHECK_THROWS_AS(c.add_two_qubit("SQiSW", 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(c.add_two_qubit("SQiSW", 0, 2), std::invalid_argument);
}

TEST_CASE("json round trip is lossless") {
  RngStream rng(4);
  GateCircuit c;
  c.qubits = 3;
  c.add_local({haar_su2(rng), haar_su2(rng), haar_su2(rng)});
  c.add_two_qubit("SQiSW", 1, 2);
  c.add_local({haar_su2(rng), Matrix2::Identity(), haar_su2(rng)});
  const std::string text = c.to_json();
  const GateCircuit back = GateCircuit::from_json(text);
  REQUIRE(back.qubits == c.qubits);
  REQUIRE(back.layers.size() == c.layers.size());
  CHECK((circuit_to_unitary(back) - circuit_to_unitary(c))
            .cwiseAbs()
            .maxCoeff() == 0.0);
  // byte-identical re-serialization
  CHECK(back.to_json() == text);
}

TEST_CASE("json schema shape") {
  GateCircuit c;
  c.qubits = 2;
  c.add_two_qubit("SQiSW", 0, 1);
  const std::string text = c.to_json();
  CHECK(text.find("\"qubits\":2") != std::string::npos);
  CHECK(text.find("\"type\":\"two_qubit\"") != std::string::npos);
  CHECK(text.find("\"name\":\"SQiSW\"") != std::string::npos);
  CHECK(text.find("\"targets\":[0,1]") != std::string::npos);
}
