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

#include "qisd/kak.hpp"

#include <cmath>
#include <stdexcept>

namespace qisd {

namespace {

const Complex kI(0.0, 1.0);

Matrix4 magic_basis_impl() {
  const double s = 0.70710678118654752440084436210485;
  Matrix4 m;
  m << s, 0, 0, kI * s,
       0, kI * s, s, 0,
       0, kI * s, -s, 0,
       s, 0, 0, -kI * s;
  return m;
}

const Matrix4& magic() {
  static const Matrix4 m = magic_basis_impl();
  return m;
}

// Diagonal positions carry the eigenphase combinations
//   (x-y+z, x+y-z, -x-y-z, -x+y+z)
// in the magic basis. The inverse reading is below in coords_from_phases.
std::array<double, 4> phase_combos(double x, double y, double z) {
  return {x - y + z, x + y - z, -x - y - z, -x + y + z};
}

InteractionCoeffs coords_from_phases(const std::array<double, 4>& phi) {
  InteractionCoeffs c;
  c.x = (phi[0] + phi[1]) / 2;
  c.y = (phi[1] + phi[3]) / 2;
  c.z = (phi[0] + phi[3]) / 2;
  return c;
}

// Jointly diagonalize the complex symmetric unitary m2 = V^T V: returns a
// real orthogonal p (det +1) and the unit-modulus diagonal d with
// m2 = p diag(d) p^T. Re(m2) and Im(m2) commute, so a generic real linear
// combination splits all degeneracies; retry with fresh coefficients until
// the residual check passes.
void diagonalize_symmetric_unitary(const Matrix4& m2, Eigen::Matrix4d& p_out,
                                   Eigen::Vector4cd& d_out) {
  RngStream rng(0x9E3779B97F4A7C15ULL, 2023);
  for (int attempt = 0; attempt < 100; ++attempt) {
    double a = 1.2602066112249388, b = 0.22317849046722027;
    if (attempt > 0) {
      a = rng.next_normal();
      b = rng.next_normal();
    }
    Eigen::Matrix4d mixed = a * m2.real() + b * m2.imag();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(mixed);
    Eigen::Matrix4d p = es.eigenvectors();
    Eigen::Vector4cd d = (p.transpose() * m2 * p).diagonal();
    Matrix4 recon = p.cast<Complex>() * d.asDiagonal() * p.transpose().cast<Complex>();
    if ((recon - m2).cwiseAbs().maxCoeff() < 1e-11) {
      if (p.determinant() < 0) p.col(3) *= -1;
      p_out = p;
      d_out = (p.transpose() * m2 * p).diagonal();
      return;
    }
  }
  throw std::runtime_error("failed to diagonalize magic-basis Gram matrix");
}

// Factor a phase times tensor product: u4 == phase * (a (x) b) with
// a, b in SU(2). Throws if u4 is not of product form.
void kron_factor(const Matrix4& u4, Matrix2& a, Matrix2& b, Complex& phase) {
  // locate the largest 2x2 block (by determinant magnitude)
  int bi = 0, bj = 0;
  double best = -1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix2 blk = u4.block<2, 2>(2 * i, 2 * j);
      const double d = std::abs(blk.determinant());
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  if (best < 1e-12) throw std::runtime_error("not a tensor product");
  Matrix2 blk = u4.block<2, 2>(2 * bi, 2 * bj);
  b = blk / std::sqrt(blk.determinant());
  Matrix4 t = u4 * kron2(Matrix2::Identity(), b.adjoint());
  a << t(0, 0), t(0, 2), t(2, 0), t(2, 2);
  const Complex det_a = a.determinant();
  a /= std::sqrt(det_a);
  phase = std::sqrt(det_a);
  // align the residual sign against the largest element
  Eigen::Index r, c;
  u4.cwiseAbs().maxCoeff(&r, &c);
  const Matrix4 recon = phase * kron2(a, b);
  phase *= u4(r, c) / recon(r, c);
  if ((phase * kron2(a, b) - u4).cwiseAbs().maxCoeff() > 1e-8)
    throw std::runtime_error("not a tensor product");
}

struct RawKak {
  Complex g;
  std::array<double, 4> phi;   // zero-sum eigenphases, position order
  Matrix4 a4, b4;              // magic-basis-converted orthogonal factors
};

// Core factorization U = g * a4 * L(coords(phi)) * b4 where a4, b4 are
// (images of) SO(4) elements, i.e. exact tensor products.
RawKak kak_raw(const Matrix4& u_in) {
  require_unitary(u_in);
  const Complex det = u_in.determinant();
  const Complex det_root = std::pow(det, 0.25);
  const Matrix4 u = u_in / det_root;
  const Matrix4& m = magic();
  const Matrix4 v = m.adjoint() * u * m;
  const Matrix4 m2 = v.transpose() * v;

  Eigen::Matrix4d p;
  Eigen::Vector4cd d;
  diagonalize_symmetric_unitary(m2, p, d);

  std::array<double, 4> phi;
  for (int k = 0; k < 4; ++k) phi[k] = std::arg(d(k)) / 2;

  auto build = [&](const std::array<double, 4>& ph, Matrix4& w, Complex& g,
                   Matrix4& a_real) {
    Eigen::Vector4cd kinv;
    for (int k = 0; k < 4; ++k) kinv(k) = std::exp(-kI * ph[k]);
    w = v * p.cast<Complex>() * kinv.asDiagonal();
    const Complex g2 = (w * w.transpose())(0, 0);
    g = std::sqrt(g2);
    a_real = w / g;
  };

  Matrix4 w, a;
  Complex g;
  build(phi, w, g, a);
  if (a.imag().cwiseAbs().maxCoeff() > 1e-8)
    throw std::runtime_error("orthogonal factor recovery failed");
  if (a.real().determinant() < 0) {
    phi[0] += kPi;
    build(phi, w, g, a);
  }
  // recenter phases to zero sum; the quarter goes into the global phase
  const double mean = (phi[0] + phi[1] + phi[2] + phi[3]) / 4;
  for (auto& ph : phi) ph -= mean;
  g *= std::exp(kI * mean);

  RawKak out;
  out.g = g * det_root;
  out.phi = phi;
  out.a4 = m * a.real().cast<Complex>() * m.adjoint();
  Matrix4 b_real = p.transpose().cast<Complex>();
  out.b4 = m * b_real * m.adjoint();
  return out;
}

// ---- chamber canonicalization moves ----
//
// Every move rewrites U = g (A1xA2) L(c) (B1xB2) exactly:
//   shift  c_i by -pi/2 : L(old) = i (P_i x P_i) L(new); absorbed left.
//   flip   signs of c_i, c_j (k the fixed one): conjugation by (I x P_k).
//   swap   c_i, c_j: conjugation by (G x G) with G = exp(-i pi/4 P_k).
struct MoveTracker {
  double c[3];
  Complex g{1.0, 0.0};
  Matrix2 A1 = Matrix2::Identity(), A2 = Matrix2::Identity();
  Matrix2 B1 = Matrix2::Identity(), B2 = Matrix2::Identity();

  static const Matrix2& pauli(int i) {
    static const Matrix2 p[3] = {pauli_x(), pauli_y(), pauli_z()};
    return p[i];
  }

  void shift(int i, int sgn) {
    g *= (sgn > 0) ? kI : -kI;
    A1 = A1 * pauli(i);
    A2 = A2 * pauli(i);
    c[i] -= sgn * (kPi / 2);
  }
  void flip(int i, int j) {
    const int k = 3 - i - j;
    c[i] = -c[i];
    c[j] = -c[j];
    A2 = A2 * pauli(k);
    B2 = pauli(k) * B2;
  }
  void swap(int i, int j) {
    const int k = 3 - i - j;
    const double s = 0.70710678118654752440084436210485;
    const Matrix2 gmat = s * Matrix2::Identity() - kI * s * pauli(k);
    std::swap(c[i], c[j]);
    A1 = A1 * gmat.adjoint();
    A2 = A2 * gmat.adjoint();
    B1 = gmat * B1;
    B2 = gmat * B2;
  }

  void canonicalize() {
    const double eps = 1e-13;
    // 1. each coordinate into (-pi/4, pi/4]
    for (int i = 0; i < 3; ++i) {
      while (c[i] > kPi / 4 + eps) shift(i, +1);
      while (c[i] <= -kPi / 4 + eps) shift(i, -1);
    }
    // 2. sort descending by |.|
    for (int pass = 0; pass < 2; ++pass) {
      if (std::abs(c[1]) > std::abs(c[0]) + eps) swap(0, 1);
      if (std::abs(c[2]) > std::abs(c[1]) + eps) swap(1, 2);
    }
    // 3. make x and y non-negative via pair flips through z
    if (c[0] < -eps) flip(0, 2);
    if (c[1] < -eps) flip(1, 2);
    // 4. boundary x = pi/4 requires z >= 0
    if (std::abs(c[0] - kPi / 4) < 1e-11 && c[2] < -eps) {
      flip(0, 2);
      shift(0, -1);
    }
    // clamp residue
    for (int i = 0; i < 3; ++i)
      if (std::abs(c[i]) < 1e-14) c[i] = 0.0;
  }
};

}  // namespace

Matrix4 magic_basis() { return magic(); }

bool InteractionCoeffs::is_canonical(double tol) const {
  if (!(kPi / 4 + tol >= x && x >= y - tol && y + tol >= std::abs(z)))
    return false;
  if (std::abs(x - kPi / 4) < tol && z < -tol) return false;
  return true;
}

Matrix4 KakDecomposition::reconstruct() const {
  return g * kron2(A1, A2) * canonical_gate(eta) * kron2(B1, B2);
}

Matrix4 canonical_gate(double x, double y, double z) {
  const auto phi = phase_combos(x, y, z);
  Eigen::Vector4cd d;
  for (int k = 0; k < 4; ++k) d(k) = std::exp(kI * phi[k]);
  const Matrix4& m = magic();
  return m * d.asDiagonal() * m.adjoint();
}

Matrix4 canonical_gate(const InteractionCoeffs& p) {
  return canonical_gate(p.x, p.y, p.z);
}

std::array<double, 4> eigenphases(const InteractionCoeffs& p) {
  return phase_combos(p.x, p.y, p.z);
}

CoordCanonicalization canonicalize_coords(double x, double y, double z) {
  MoveTracker t;
  t.c[0] = x;
  t.c[1] = y;
  t.c[2] = z;
  t.canonicalize();
  CoordCanonicalization out;
  out.coords = {t.c[0], t.c[1], t.c[2]};
  out.g = t.g;
  out.A1 = t.A1;
  out.A2 = t.A2;
  out.B1 = t.B1;
  out.B2 = t.B2;
  return out;
}

KakDecomposition kak_decompose(const Matrix4& u) {
  RawKak raw = kak_raw(u);
  const InteractionCoeffs craw = coords_from_phases(raw.phi);

  MoveTracker t;
  t.c[0] = craw.x;
  t.c[1] = craw.y;
  t.c[2] = craw.z;
  t.canonicalize();

  KakDecomposition out;
  out.eta = {t.c[0], t.c[1], t.c[2]};

  Matrix2 a1, a2, b1, b2;
  Complex pa, pb;
  kron_factor(raw.a4, a1, a2, pa);
  kron_factor(raw.b4, b1, b2, pb);

  out.A1 = a1 * t.A1;
  out.A2 = a2 * t.A2;
  out.B1 = t.B1 * b1;
  out.B2 = t.B2 * b2;
  out.g = raw.g * pa * pb * t.g;
  // keep |g| = 1 against rounding drift
  out.g /= std::abs(out.g);
  return out;
}

InteractionCoeffs kak_coordinates(const Matrix4& u) {
  RawKak raw = kak_raw(u);
  const InteractionCoeffs craw = coords_from_phases(raw.phi);
  MoveTracker t;
  t.c[0] = craw.x;
  t.c[1] = craw.y;
  t.c[2] = craw.z;
  t.canonicalize();
  return {t.c[0], t.c[1], t.c[2]};
}

CharPolyCoeffs char_poly_at(const InteractionCoeffs& p) {
  const auto a = phase_combos(p.x, p.y, p.z);
  CharPolyCoeffs out;
  out.A = std::cos(a[0]) * std::cos(a[1]) * std::cos(a[2]) * std::cos(a[3]);
  out.B = -std::sin(2 * p.x) * std::sin(2 * p.y) * std::sin(2 * p.z);
  out.C = std::sin(a[0]) * std::sin(a[1]) * std::sin(a[2]) * std::sin(a[3]);
  return out;
}

CharPolyCoeffs char_poly_coeffs(const Matrix4& u) {
  require_unitary(u);
  const Matrix4 us = to_special_unitary(u);
  const Matrix4 v = magic().adjoint() * us * magic();
  const Eigen::Matrix4d re = v.real();
  const Eigen::Matrix4d im = v.imag();
  // F(t) = C t^4 + B t^3 + (A + C - 1) t^2 + B t + A; five-point exact fit
  const double t_nodes[5] = {-2, -1, 0, 1, 2};
  double f[5];
  for (int k = 0; k < 5; ++k)
    f[k] = (re + t_nodes[k] * im).determinant();
  const double A = f[2];
  // solve via symmetric combinations: quartic coeff C and cubic coeff B
  const double s1 = (f[3] + f[1]) / 2.0 - f[2];        // c4 + c2
  const double s2 = (f[4] + f[0]) / 2.0 - f[2];        // 16 c4 + 4 c2
  const double c4 = (s2 - 4.0 * s1) / 12.0;
  const double a1 = (f[3] - f[1]) / 2.0;               // c3 + c1
  const double a2 = (f[4] - f[0]) / 2.0;               // 8 c3 + 2 c1
  const double c3 = (a2 - 2.0 * a1) / 6.0;
  CharPolyCoeffs ext{A, c3, c4};
  // orientation fix: the det root is defined modulo i, which maps
  // (A,B,C) -> (C,-B,A); pick the reading matching the eigenphase form
  const CharPolyCoeffs ref = char_poly_at(kak_coordinates(u));
  const double d1 = std::abs(ext.A - ref.A) + std::abs(ext.B - ref.B) +
                    std::abs(ext.C - ref.C);
  const double d2 = std::abs(ext.C - ref.A) + std::abs(-ext.B - ref.B) +
                    std::abs(ext.A - ref.C);
  if (d2 < d1) return {ext.C, -ext.B, ext.A};
  return ext;
}

Complex char_poly_eval(const Matrix4& u, Complex t) {
  const Matrix4 us = to_special_unitary(u);
  const Matrix4 v = magic().adjoint() * us * magic();
  const Matrix4 m = v.real().cast<Complex>() + t * v.imag().cast<Complex>();
  return m.determinant();
}

bool locally_equivalent(const Matrix4& u, const Matrix4& v, double tol) {
  const CharPolyCoeffs cu = char_poly_coeffs(u);
  const CharPolyCoeffs cv = char_poly_coeffs(v);
  return std::abs(cu.A - cv.A) < tol && std::abs(cu.B - cv.B) < tol &&
         std::abs(cu.C - cv.C) < tol;
}

InteractionCoeffs mirror_coords(const InteractionCoeffs& p) {
  return canonicalize_coords(kPi / 4 - p.z, kPi / 4 - p.y, p.x - kPi / 4)
      .coords;
}

}  // namespace qisd
