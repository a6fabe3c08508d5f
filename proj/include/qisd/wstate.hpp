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

#include "qisd/circuit.hpp"

namespace qisd {

/// The chain circuit SQiSW_{n-1,n} ... SQiSW_{1,2} X_1 |0...0>: produces a
/// single-excitation state with amplitude moduli 2^{-i/2} on qubit i
/// (1-based) for i <= n-1 and 2^{-(n-1)/2} on the last qubit.
/// Valid for 2 <= n <= 12.
GateCircuit w_like_chain_circuit(int n);

/// Statevector of the chain circuit.
VectorX w_like_chain_state(int n);

/// Exact n-qubit W state (1/sqrt(n)) sum_i |0..1_i..0>.
VectorX w_state(int n);
/// (|0..0> + |1..1>)/sqrt(2).
VectorX ghz_state(int n);

/// Reduced two-qubit density matrix of qubits (a, b).
Matrix4 two_qubit_marginal(const VectorX& psi, int n, int a, int b);

/// Minimum eigenvalue of the partial transpose of a two-qubit state
/// (negative iff entangled; the criterion is exact at this dimension).
double partial_transpose_min_eigenvalue(const Matrix4& rho);

/// True iff every two-qubit marginal is entangled (min PT eigenvalue
/// below -1e-9). Accepts up to 12 qubits.
bool is_w_like(const VectorX& psi, int n);

}  // namespace qisd
