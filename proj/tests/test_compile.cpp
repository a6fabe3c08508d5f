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

#include "qisd/compile.hpp"

using namespace qisd;

namespace {

InteractionCoeffs rand_wprime(RngStream& rng) {
  for (;;) {
    InteractionCoeffs p;
    p.x = rng.next_double() * kPi / 4;
    p.y = rng.next_double() * p.x;
    p.z = (2 * rng.next_double() - 1) * p.y;
    if (p.x >= p.y + std::abs(p.z) && p.is_canonical(0.0)) return p;
  }
}

InteractionCoeffs rand_outside(RngStream& rng) {
  for (;;) {
    InteractionCoeffs p;
    p.x = rng.next_double() * kPi / 4;
    p.y = rng.next_double() * p.x;
    p.z = (2 * rng.next_double() - 1) * p.y;
    if (p.x < p.y + std::abs(p.z) - 1e-6 && p.is_canonical(0.0)) return p;
  }
}

}  // namespace

TEST_CASE("interleaving rotations hit the target class across W'") {
  RngStream rng(53);
  const Matrix4 s = named_gate("SQiSW");
  for (int i = 0; i < 100; ++i) {
    const auto p = rand_wprime(rng);
    const auto r = interleaving_rotations(p);
    const Matrix2 c1 = rz(r.gamma) * rx(r.alpha) * rz(r.gamma);
    const Matrix2 c2 = rx(r.beta);
    const Matrix4 v = s * kron2(c1, c2) * s;
    CHECK(locally_equivalent(v, canonical_gate(p), 1e-8));
  }
}

TEST_CASE("interleaving rotations at the special points") {
  // SQiSW itself
  {
    const auto r = interleaving_rotations({kPi / 8, kPi / 8, 0});
    const Matrix4 v = named_gate("SQiSW") *
                      kron2(rz(r.gamma) * rx(r.alpha) * rz(r.gamma), rx(r.beta)) *
                      named_gate("SQiSW");
    CHECK(locally_equivalent(v, named_gate("SQiSW"), 1e-8));
  }
  // iSWAP coordinates: alpha = 0 branch of the special orthogonal family
  {
    const auto r = interleaving_rotations({kPi / 4, kPi / 4, 0});
    CHECK(std::abs(r.alpha) < 1e-7);
    const Matrix4 v = named_gate("SQiSW") *
                      kron2(rz(r.gamma) * rx(r.alpha) * rz(r.gamma), rx(r.beta)) *
                      named_gate("SQiSW");
    CHECK(locally_equivalent(v, named_gate("iSWAP"), 1e-8));
  }
  // identity coordinates
  {
    const auto r = interleaving_rotations({0, 0, 0});
    const Matrix4 v = named_gate("SQiSW") *
                      kron2(rz(r.gamma) * rx(r.alpha) * rz(r.gamma), rx(r.beta)) *
                      named_gate("SQiSW");
    CHECK(average_gate_fidelity(v, Matrix4::Identity()) >= 1.0 - 1e-8);
  }
  CHECK_THROWS_WITH_AS(interleaving_rotations({kPi / 16, kPi / 16, kPi / 16}),
                       "outside W-prime", std::invalid_argument);
}

TEST_CASE("gauge freedom: Rz x Rz conjugation keeps the char poly") {
  RngStream rng(59);
  const Matrix4 s = named_gate("SQiSW");
  for (int i = 0; i < 30; ++i) {
    const auto p = rand_wprime(rng);
    const auto r = interleaving_rotations(p);
    const Matrix2 c1 = rz(r.gamma) * rx(r.alpha) * rz(r.gamma);
    const Matrix2 c2 = rx(r.beta);
    const double t = rng.next_double() * 2 * kPi;
    const Matrix4 dressed =
        s * kron2(rz(t) * c1 * rz(-t), rz(t) * c2 * rz(-t)) * s;
    const Matrix4 plain = s * kron2(c1, c2) * s;
    const auto ca = char_poly_coeffs(dressed);
    const auto cb = char_poly_coeffs(plain);
    CHECK(std::abs(ca.A - cb.A) < 1e-9);
    CHECK(std::abs(ca.B - cb.B) < 1e-9);
    CHECK(std::abs(ca.C - cb.C) < 1e-9);
  }
}

TEST_CASE("two-SQiSW sandwiches have C >= 0") {
  RngStream rng(61);
  const Matrix4 s = named_gate("SQiSW");
  for (int i = 0; i < 1000; ++i) {
    const Matrix4 v = s * kron2(haar_su2(rng), haar_su2(rng)) * s;
    CHECK(char_poly_coeffs(v).C >= -1e-12);
  }
}

TEST_CASE("canonicalize: SWAP case") {
  const auto step = canonicalize({kPi / 4, kPi / 4, kPi / 4});
  CHECK(std::abs(step.coords.x - kPi / 4) < 1e-12);
  CHECK(std::abs(step.coords.y - kPi / 8) < 1e-12);
  CHECK(std::abs(step.coords.z - kPi / 8) < 1e-12);
  CHECK(average_gate_fidelity(step.reconstruct(),
                              canonical_gate(kPi / 4, kPi / 4, kPi / 4)) >=
        1.0 - 1e-9);
}

TEST_CASE("canonicalize: x <= pi/8 branch and z-sign branch") {
  {
    const auto step = canonicalize({kPi / 16, kPi / 16, kPi / 16});
    // x' = x + pi/8, z' = z - pi/8; boundary |y'| = |z'| means no crossing
    CHECK(std::abs(step.coords.x - 3 * kPi / 16) < 1e-12);
    CHECK(average_gate_fidelity(
              step.reconstruct(),
              canonical_gate(kPi / 16, kPi / 16, kPi / 16)) >= 1.0 - 1e-9);
  }
  {
    // mirror-identified z < 0 input exercises the sign branch
    const auto pos = canonicalize({kPi / 4, kPi / 4, kPi / 4});
    const auto neg = canonicalize({kPi / 4, kPi / 4, -kPi / 4});
    CHECK(std::abs(neg.coords.x - pos.coords.x) < 1e-12);
    CHECK(std::abs(neg.coords.y - pos.coords.y) < 1e-12);
    CHECK(std::abs(std::abs(neg.coords.z) - std::abs(pos.coords.z)) < 1e-12);
    CHECK(average_gate_fidelity(neg.reconstruct(),
                                canonical_gate(kPi / 4, kPi / 4, -kPi / 4)) >=
          1.0 - 1e-9);
  }
  CHECK_THROWS_WITH_AS(canonicalize({kPi / 8, kPi / 8, 0}),
                       "already canonical-2", std::invalid_argument);
}

TEST_CASE("canonicalize lands in W' with exact reconstruction") {
  RngStream rng(67);
  for (int i = 0; i < 200; ++i) {
    const auto p = rand_outside(rng);
    const auto step = canonicalize(p);
    CHECK(step.coords.x + 1e-9 >= step.coords.y + std::abs(step.coords.z));
    CHECK(average_gate_fidelity(step.reconstruct(), canonical_gate(p)) >=
          1.0 - 1e-9);
  }
}

TEST_CASE("decompose named gates with optimal counts") {
  struct Row {
    const char* name;
    int count;
  };
  for (const Row& row : {Row{"I", 0}, Row{"SQiSW", 1}, Row{"CNOT", 2},
                         Row{"CZ", 2}, Row{"iSWAP", 2}, Row{"B", 2},
                         Row{"SWAP", 3}}) {
    const Matrix4 u = named_gate(row.name);
    const GateCircuit c = decompose(u);
    CHECK(c.count_two_qubit("SQiSW") == row.count);
    CHECK(compiled_fidelity(c, u) >= 1.0 - 1e-8);
  }
}

TEST_CASE("decompose exercises both reduction branches") {
  for (const Matrix4& u : {canonical_gate(kPi / 4, kPi / 4, -kPi / 8),
                           canonical_gate(kPi / 16, kPi / 16, kPi / 16),
                           canonical_gate(0.3, 0.29, -0.28)}) {
    const GateCircuit c = decompose(u);
    CHECK(c.count_two_qubit("SQiSW") == 3);
    CHECK(compiled_fidelity(c, u) >= 1.0 - 1e-8);
  }
}

TEST_CASE("decompose Haar samples: counts optimal, fidelity exact") {
  RngStream rng(71);
  int twos = 0, threes = 0;
  const int n = 300;
  for (int i = 0; i < n; ++i) {
    const Matrix4 u = haar_su4(rng);
    const GateCircuit c = decompose(u);
    const int count = c.count_two_qubit("SQiSW");
    CHECK(count == required_sqisw_count(kak_coordinates(u)));
    CHECK(compiled_fidelity(c, u) >= 1.0 - 1e-8);
    if (count == 2) ++twos;
    if (count == 3) ++threes;
  }
  CHECK(twos + threes == n);
  // ~79% should need two gates; allow a wide static band at n = 300
  CHECK(twos > n * 0.70);
  CHECK(twos < n * 0.88);
}

TEST_CASE("iSWAP backend: counts and fidelity") {
  struct Row {
    const char* name;
    int count;
  };
  for (const Row& row : {Row{"I", 0}, Row{"iSWAP", 1}, Row{"CNOT", 2},
                         Row{"CZ", 2}, Row{"SQiSW", 2}, Row{"SWAP", 3}}) {
    const Matrix4 u = named_gate(row.name);
    const GateCircuit c = decompose_iswap(u);
    CHECK(c.count_two_qubit("iSWAP") == row.count);
    CHECK(compiled_fidelity(c, u) >= 1.0 - 1e-8);
  }
  RngStream rng(73);
  for (int i = 0; i < 25; ++i) {
    const Matrix4 u = haar_su4(rng);
    const GateCircuit c = decompose_iswap(u);
    CHECK(c.count_two_qubit("iSWAP") == 3);
    CHECK(compiled_fidelity(c, u) >= 1.0 - 1e-8);
  }
}

TEST_CASE("special families reconstruct their targets") {
  RngStream rng(79);
  for (int i = 0; i < 12; ++i) {
    const double x = 0.03 + rng.next_double() * (kPi / 4 - 0.06);
    const double y = rng.next_double() * x;
    {
      const GateCircuit c = decompose_special(SpecialFamily::Cphase, x);
      CHECK(c.count_two_qubit("SQiSW") == 2);
      CHECK(compiled_fidelity(c, canonical_gate(x, 0, 0)) >= 1.0 - 1e-8);
    }
    {
      const GateCircuit c =
          decompose_special(SpecialFamily::SpecialOrthogonal, x, y);
      CHECK(compiled_fidelity(c, canonical_gate(x, y, 0)) >= 1.0 - 1e-8);
    }
    {
      const GateCircuit c = decompose_special(SpecialFamily::SuperControlled, y);
      CHECK(compiled_fidelity(c, canonical_gate(kPi / 4, y, 0)) >= 1.0 - 1e-8);
    }
    {
      const GateCircuit c = decompose_special(SpecialFamily::IswapFamily, x);
      CHECK(compiled_fidelity(c, canonical_gate(x, x, 0)) >= 1.0 - 1e-8);
    }
    {
      const double z = (2 * rng.next_double() - 1) *
                       std::min(y, kPi / 4 - y) * 0.95;
      const GateCircuit c =
          decompose_special(SpecialFamily::ImproperOrthogonal, y, z);
      CHECK(compiled_fidelity(c, canonical_gate(kPi / 4, y, z)) >= 1.0 - 1e-8);
    }
  }
}

TEST_CASE("iswap_family(pi/4) reproduces iSWAP itself") {
  const GateCircuit c = decompose_special(SpecialFamily::IswapFamily, kPi / 4);
  CHECK(compiled_fidelity(c, named_gate("iSWAP")) >= 1.0 - 1e-8);
}

TEST_CASE("improper orthogonal at y = z = 0 reduces to the CNOT class") {
  const GateCircuit c =
      decompose_special(SpecialFamily::ImproperOrthogonal, 0.0, 0.0);
  CHECK(compiled_fidelity(c, canonical_gate(kPi / 4, 0, 0)) >= 1.0 - 1e-8);
}

TEST_CASE("improper orthogonal outside validity falls back to generic") {
  // y + |z| > pi/4 is the three-gate half of the family
  const double y = 0.7, z = 0.3;
  const GateCircuit c =
      decompose_special(SpecialFamily::ImproperOrthogonal, y, z);
  CHECK(compiled_fidelity(c, canonical_gate(kPi / 4, y, z)) >= 1.0 - 1e-8);
  CHECK(c.count_two_qubit("SQiSW") == 3);
}

TEST_CASE("required counts") {
  CHECK(required_sqisw_count({0, 0, 0}) == 0);
  CHECK(required_sqisw_count({kPi / 8, kPi / 8, 0}) == 1);
  CHECK(required_sqisw_count({kPi / 4, kPi / 4, 0}) == 2);
  CHECK(required_sqisw_count({kPi / 4, kPi / 4, kPi / 4}) == 3);
  CHECK(required_cnot_count({kPi / 4, 0, 0}) == 1);
  CHECK(required_cnot_count({0.3, 0.2, 0}) == 2);
  CHECK(required_cnot_count({0.3, 0.2, 0.1}) == 3);
  CHECK(required_count(Backend::iSWAP, {kPi / 4, kPi / 4, 0}) == 1);
  CHECK(required_count(Backend::iSWAP, {0.3, 0.2, 0}) == 2);
  CHECK(required_count(Backend::iSWAP, {0.3, 0.2, -0.1}) == 3);
}
