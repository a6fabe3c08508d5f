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

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "qisd/rng.hpp"

namespace qisd {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using MatrixX = Eigen::MatrixXcd;
using VectorX = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// ---- single-qubit constants ----
Matrix2 pauli_i();
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
Matrix2 hadamard();

/// Rotation convention used throughout: R_P(theta) = exp(+i theta P / 2).
Matrix2 rx(double theta);
Matrix2 ry(double theta);
Matrix2 rz(double theta);

Matrix4 kron2(const Matrix2& a, const Matrix2& b);
MatrixX kron(const MatrixX& a, const MatrixX& b);

/// n-th of the 16 two-qubit Pauli strings, ordered I,X,Y,Z x I,X,Y,Z.
Matrix4 pauli_string2(int n);

// ---- unitarity ----
bool is_unitary(const MatrixX& u, double tol = 1e-9);
/// Throws std::invalid_argument when `u` is not unitary within `tol`.
void require_unitary(const MatrixX& u, double tol = 1e-9);

/// Divides out a determinant root so det becomes 1 (principal branch).
Matrix2 to_special_unitary(const Matrix2& u);
Matrix4 to_special_unitary(const Matrix4& u);

// ---- named two-qubit gates ----
/// Supported: I, CNOT, CZ, iSWAP, iSWAP†, SQiSW, SQiSW†, SWAP, SWAP†, B.
/// ASCII aliases "iSWAPdg", "SQiSWdg", "SWAPdg" are accepted.
/// Unknown names throw std::invalid_argument("unknown gate").
Matrix4 named_gate(const std::string& name);

// ---- Haar sampling ----
/// Haar-random element of SU(dim), dim in {2, 4}. Ginibre matrix + QR with
/// the R-diagonal phase correction, then det-normalized.
MatrixX haar_random_unitary(int dim, RngStream& rng);
Matrix4 haar_su4(RngStream& rng);
Matrix2 haar_su2(RngStream& rng);

// ---- fidelity ----
/// F(U,V) = (|tr(V†U)|² + d) / (d(d+1)) with d = 4. Global-phase invariant.
double average_gate_fidelity(const Matrix4& u, const Matrix4& v);

// ---- Clifford hierarchy ----
struct CliffordHierarchy {
  bool is_clifford = false;
  bool in_level_3 = false;
};

/// A conjugated operator counts as "a Pauli" when its normalized
/// Hilbert-Schmidt overlap with some Pauli string exceeds 1 - 1e-9.
CliffordHierarchy clifford_hierarchy_checks(const Matrix4& u);

}  // namespace qisd
