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

#include "qisd/circuit.hpp"
#include "qisd/kak.hpp"

namespace qisd {

/// Two-qubit instruction sets a target can be compiled into.
enum class Backend { SQiSW, iSWAP };

/// Single-qubit rotations that sandwich two SQiSW gates to realize a
/// gate with the given coordinates on the first qubit
/// (Rz(gamma) Rx(alpha) Rz(gamma)) and the second (Rx(beta)).
struct InterleavingRotations {
  double alpha = 0, beta = 0, gamma = 0;
};

/// Valid on the two-SQiSW region x >= y + |z|; throws
/// std::invalid_argument("outside W-prime") elsewhere. sgn(0) = +1.
InterleavingRotations interleaving_rotations(const InteractionCoeffs& p);

/// One step of the three-gate reduction: coordinates outside the two-gate
/// region are written as
///   L(x,y,z) = g * (F1 x F2) L(coords') (G1 x G2) SQiSW (H1 x H2)
/// with coords' inside the two-gate region.
struct CanonicalizationStep {
  InteractionCoeffs coords;  // in W'
  Complex g{1.0, 0.0};
  Matrix2 F1, F2, G1, G2, H1, H2;

  Matrix4 reconstruct() const;
};

/// Requires p in W \ W'; throws std::invalid_argument("already canonical-2")
/// on two-gate-region input.
CanonicalizationStep canonicalize(const InteractionCoeffs& p);

/// Minimal number of SQiSW applications for a canonical chamber point:
/// 0 for identity, 1 for the SQiSW class, 2 on x >= y + |z|, else 3.
int required_sqisw_count(const InteractionCoeffs& p, double tol = 1e-9);

/// Minimal number of applications of the backend instruction. For CNOT and
/// iSWAP the two-application set is the z = 0 plane; one application covers
/// only the instruction's own class.
int required_count(Backend backend, const InteractionCoeffs& p,
                   double tol = 1e-9);
int required_cnot_count(const InteractionCoeffs& p, double tol = 1e-9);

/// Compile an arbitrary two-qubit unitary into the minimal number of SQiSW
/// instructions interleaved with single-qubit layers. The result
/// reconstructs `u` up to global phase with average gate fidelity
/// >= 1 - 1e-8 (verified internally; throws std::runtime_error otherwise).
GateCircuit decompose(const Matrix4& u);

/// Same contract for the iSWAP instruction set: 2 applications on the
/// z = 0 plane, 3 elsewhere.
GateCircuit decompose_iswap(const Matrix4& u);

GateCircuit decompose(const Matrix4& u, Backend backend);

/// Closed-form special families. Parameters outside the stated validity
/// range fall back to the generic decomposition.
///   cphase(x)              -> L(x,0,0)
///   special_orthogonal(x,y)-> L(x,y,0)
///   super_controlled(y)    -> L(pi/4,y,0)
///   iswap_family(x)        -> L(x,x,0)
///   improper_orthogonal(y,z)->L(pi/4,y,z)   (two gates when y+|z|<=pi/4)
enum class SpecialFamily {
  Cphase,
  SpecialOrthogonal,
  SuperControlled,
  IswapFamily,
  ImproperOrthogonal
};
GateCircuit decompose_special(SpecialFamily family, double p0, double p1 = 0.0);

/// Target coordinates realized by a special-family parameter choice.
InteractionCoeffs special_family_coords(SpecialFamily family, double p0,
                                        double p1 = 0.0);

/// Analytic outer-correction angles of the special-orthogonal family
/// (reference quantities; reconstruction uses KAK-recovered corrections).
struct SpecialOrthogonalAngles {
  double alpha = 0, beta = 0, gamma = 0;
  double xi = 0, phi = 0, psi = 0;
};
SpecialOrthogonalAngles special_orthogonal_angles(double x, double y);

/// Fidelity between the compiled circuit and the target (diagnostic).
double compiled_fidelity(const GateCircuit& c, const Matrix4& target);

}  // namespace qisd
