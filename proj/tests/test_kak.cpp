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

#include <cmath>

#include "qisd/gates.hpp"
#include "qisd/kak.hpp"

using namespace qisd;

namespace {

void check_eta(const char* name, const InteractionCoeffs& expect) {
  const auto k = kak_decompose(named_gate(name));
  CHECK(std::abs(k.eta.x - expect.x) < 1e-9);
  CHECK(std::abs(k.eta.y - expect.y) < 1e-9);
  CHECK(std::abs(k.eta.z - expect.z) < 1e-9);
}

}  // namespace

TEST_CASE("canonical gate special points") {
  CHECK((canonical_gate(0, 0, 0) - Matrix4::Identity()).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK(average_gate_fidelity(canonical_gate(kPi / 4, kPi / 4, kPi / 4),
                              named_gate("SWAP")) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK((canonical_gate(kPi / 8, kPi / 8, 0) - named_gate("SQiSW"))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK((canonical_gate(kPi / 4, kPi / 4, 0) - named_gate("iSWAP"))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("named gate coordinates match the standard table") {
  check_eta("I", {0, 0, 0});
  check_eta("CNOT", {kPi / 4, 0, 0});
  check_eta("CZ", {kPi / 4, 0, 0});
  check_eta("iSWAP", {kPi / 4, kPi / 4, 0});
  check_eta("SQiSW", {kPi / 8, kPi / 8, 0});
  check_eta("SQiSWdg", {kPi / 8, kPi / 8, 0});
  check_eta("SWAP", {kPi / 4, kPi / 4, kPi / 4});
  check_eta("B", {kPi / 4, kPi / 8, 0});
}

TEST_CASE("kak roundtrip on Haar samples") {
  RngStream rng(17);
  for (int i = 0; i < 300; ++i) {
    const Matrix4 u = haar_su4(rng);
    const auto k = kak_decompose(u);
    CHECK(k.eta.is_canonical());
    CHECK(average_gate_fidelity(k.reconstruct(), u) >= 1.0 - 1e-9);
    CHECK(is_unitary(k.A1));
    CHECK(is_unitary(k.B2));
  }
}

TEST_CASE("kak of locally dressed CNOT lands on (pi/4, 0, 0)") {
  RngStream rng(23);
  for (int i = 0; i < 50; ++i) {
    const Matrix2 a = haar_su2(rng), b = haar_su2(rng);
    const Matrix2 c = haar_su2(rng), d = haar_su2(rng);
    const Matrix4 u = kron2(a, b) * named_gate("CNOT") * kron2(c, d);
    const auto k = kak_decompose(u);
    CHECK(std::abs(k.eta.x - kPi / 4) < 1e-9);
    CHECK(std::abs(k.eta.y) < 1e-9);
    CHECK(std::abs(k.eta.z) < 1e-9);
  }
}

TEST_CASE("kak rejects non-unitary input") {
  Matrix4 bad = Matrix4::Identity();
  bad(2, 2) = 0.5;
  CHECK_THROWS_AS(kak_decompose(bad), std::invalid_argument);
}

TEST_CASE("char poly: identity and CNOT") {
  const auto ci = char_poly_coeffs(Matrix4::Identity());
  CHECK(ci.A == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(ci.B) < 1e-12);
  CHECK(std::abs(ci.C) < 1e-12);
  // at (pi/4,0,0): A = cos^4(pi/4) = 1/4, B = 0, C = 1/4
  const auto cc = char_poly_coeffs(named_gate("CNOT"));
  CHECK(cc.A == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(std::abs(cc.B) < 1e-12);
  CHECK(cc.C == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("char poly at +-i equals 1 for SU(4)") {
  RngStream rng(29);
  for (int i = 0; i < 100; ++i) {
    const Matrix4 u = haar_su4(rng);
    CHECK(std::abs(char_poly_eval(u, Complex(0, 1)) - Complex(1, 0)) < 1e-9);
    CHECK(std::abs(char_poly_eval(u, Complex(0, -1)) - Complex(1, 0)) < 1e-9);
  }
}

TEST_CASE("char poly invariance under local dressing") {
  RngStream rng(31);
  for (int i = 0; i < 50; ++i) {
    const Matrix4 u = haar_su4(rng);
    const Matrix2 a = haar_su2(rng), b = haar_su2(rng);
    const Matrix2 c = haar_su2(rng), d = haar_su2(rng);
    const Matrix4 v = kron2(a, b) * u * kron2(c, d);
    const auto cu = char_poly_coeffs(u);
    const auto cv = char_poly_coeffs(v);
    CHECK(std::abs(cu.A - cv.A) < 1e-9);
    CHECK(std::abs(cu.B - cv.B) < 1e-9);
    CHECK(std::abs(cu.C - cv.C) < 1e-9);
  }
}

TEST_CASE("char poly consistency with the canonical gate") {
  RngStream rng(37);
  for (int i = 0; i < 50; ++i) {
    const Matrix4 u = haar_su4(rng);
    const auto eta = kak_coordinates(u);
    const auto cu = char_poly_coeffs(u);
    const auto cl = char_poly_coeffs(canonical_gate(eta));
    const auto closed = char_poly_at(eta);
    CHECK(std::abs(cu.A - cl.A) < 1e-9);
    CHECK(std::abs(cu.B - cl.B) < 1e-9);
    CHECK(std::abs(cu.C - cl.C) < 1e-9);
    CHECK(std::abs(cu.A - closed.A) < 1e-9);
    CHECK(std::abs(cu.B - closed.B) < 1e-9);
    CHECK(std::abs(cu.C - closed.C) < 1e-9);
  }
}

TEST_CASE("local equivalence") {
  CHECK(locally_equivalent(named_gate("CNOT"), named_gate("CZ")));
  CHECK_FALSE(locally_equivalent(named_gate("SQiSW"), named_gate("iSWAP")));
  RngStream rng(41);
  const Matrix4 u = haar_su4(rng);
  const Matrix2 a = haar_su2(rng), b = haar_su2(rng);
  const Matrix2 c = haar_su2(rng), d = haar_su2(rng);
  CHECK(locally_equivalent(u, kron2(a, b) * u * kron2(c, d)));
}

TEST_CASE("mirror coordinates") {
  const auto m1 = mirror_coords({kPi / 8, kPi / 8, 0});
  CHECK(std::abs(m1.x - kPi / 4) < 1e-12);
  CHECK(std::abs(m1.y - kPi / 8) < 1e-12);
  CHECK(std::abs(m1.z - kPi / 8) < 1e-12);
  const auto m2 = mirror_coords({kPi / 4, 0, 0});
  CHECK(std::abs(m2.x - kPi / 4) < 1e-12);
  CHECK(std::abs(m2.y - kPi / 4) < 1e-12);
  CHECK(std::abs(m2.z) < 1e-12);
  const auto m3 = mirror_coords({kPi / 4, kPi / 4, kPi / 4});
  CHECK(std::abs(m3.x) < 1e-12);
  CHECK(std::abs(m3.y) < 1e-12);
  CHECK(std::abs(m3.z) < 1e-12);
}

TEST_CASE("mirror coordinates agree with SWAP composition") {
  RngStream rng(43);
  for (int i = 0; i < 50; ++i) {
    const auto eta = kak_coordinates(haar_su4(rng));
    const auto formula = mirror_coords(eta);
    const auto direct = kak_coordinates(
        Matrix4(named_gate("SWAP") * canonical_gate(eta)));
    CHECK(std::abs(formula.x - direct.x) < 1e-9);
    CHECK(std::abs(formula.y - direct.y) < 1e-9);
    CHECK(std::abs(formula.z - direct.z) < 1e-9);
  }
}

TEST_CASE("coordinate canonicalization tracks exact corrections") {
  RngStream rng(47);
  for (int i = 0; i < 100; ++i) {
    const double x = (rng.next_double() - 0.5) * 4 * kPi;
    const double y = (rng.next_double() - 0.5) * 4 * kPi;
    const double z = (rng.next_double() - 0.5) * 4 * kPi;
    const auto cc = canonicalize_coords(x, y, z);
    CHECK(cc.coords.is_canonical());
    const Matrix4 recon = cc.g * kron2(cc.A1, cc.A2) *
                          canonical_gate(cc.coords) * kron2(cc.B1, cc.B2);
    CHECK((recon - canonical_gate(x, y, z)).cwiseAbs().maxCoeff() < 1e-10);
  }
}
