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

#include <array>

#include "qisd/gates.hpp"

namespace qisd {

/// Canonical Weyl-chamber point: pi/4 >= x >= y >= |z|, and z >= 0 when
/// x = pi/4. Classifies a two-qubit gate modulo single-qubit unitaries.
struct InteractionCoeffs {
  double x = 0, y = 0, z = 0;

  bool is_canonical(double tol = 1e-9) const;
  std::array<double, 3> as_array() const { return {x, y, z}; }
};

/// U = g * (A1 (x) A2) * L(eta) * (B1 (x) B2), with A*, B* in SU(2) and g a
/// unit complex scalar (the residual global phase after det normalization).
struct KakDecomposition {
  Complex g{1.0, 0.0};
  InteractionCoeffs eta;
  Matrix2 A1, A2, B1, B2;

  Matrix4 reconstruct() const;
};

/// Coefficients of F_U(t) = (t^2+1)(C t^2 + B t + A) - t^2 where
/// F_U(t) = det(Re[M†UM] + t Im[M†UM]). Complete local invariant.
struct CharPolyCoeffs {
  double A = 0, B = 0, C = 0;
};

/// The magic basis change matrix.
Matrix4 magic_basis();

/// Canonical gate L(x,y,z) = exp(i (x XX + y YY + z ZZ)). Accepts any real
/// triple; evaluated in closed form through the magic basis.
Matrix4 canonical_gate(const InteractionCoeffs& p);
Matrix4 canonical_gate(double x, double y, double z);

/// Magic-basis eigenphase combination {x+y-z, x-y+z, -x+y+z, -x-y-z} of a
/// canonical point, in the fixed diagonal-position order used internally.
std::array<double, 4> eigenphases(const InteractionCoeffs& p);

/// Full KAK decomposition with the eta canonicalized into the chamber.
/// Throws std::invalid_argument on non-unitary input.
KakDecomposition kak_decompose(const Matrix4& u);

/// Chamber coordinates only (same canonicalization, no local recovery).
/// Faster path for classification and Monte-Carlo pushforward loops.
InteractionCoeffs kak_coordinates(const Matrix4& u);

/// Canonicalize an arbitrary coordinate triple into the chamber while
/// tracking the exact local corrections:
///   L(x,y,z) = g * (A1 (x) A2) * L(out) * (B1 (x) B2).
struct CoordCanonicalization {
  InteractionCoeffs coords;
  Complex g{1.0, 0.0};
  Matrix2 A1, A2, B1, B2;
};
CoordCanonicalization canonicalize_coords(double x, double y, double z);

/// Character polynomial coefficients; the quartic is evaluated by five real
/// 4x4 determinants and fitted exactly. The SU(4) determinant-root branch
/// flips (A,B,C) <-> (C,-B,A); the orientation is fixed against the closed
/// form evaluated at the eigenphase coordinates so that locally equivalent
/// inputs always produce identical coefficients.
CharPolyCoeffs char_poly_coeffs(const Matrix4& u);

/// Closed form of (A,B,C) at a chamber point.
CharPolyCoeffs char_poly_at(const InteractionCoeffs& p);

/// Evaluate F_U(t) at complex t (diagnostic; F_U(±i) = 1 for SU(4) input).
Complex char_poly_eval(const Matrix4& u, Complex t);

/// True iff char-poly coefficients agree componentwise within tol.
bool locally_equivalent(const Matrix4& u, const Matrix4& v, double tol = 1e-9);

/// Canonical coordinates of SWAP * L(p) (the mirror gate).
InteractionCoeffs mirror_coords(const InteractionCoeffs& p);

}  // namespace qisd
