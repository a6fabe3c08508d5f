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

TEST_CASE("SQiSW maps |01> to (|01> + i|10>)/sqrt(2)") {
  const Matrix4 s = named_gate("SQiSW");
  Eigen::Vector4cd in = Eigen::Vector4cd::Zero();
  in(1) = 1.0;
  const Eigen::Vector4cd out = s * in;
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(out(1) - Complex(r, 0)) < 1e-12);
  CHECK(std::abs(out(2) - Complex(0, r)) < 1e-12);
  CHECK(std::abs(out(0)) < 1e-12);
  CHECK(std::abs(out(3)) < 1e-12);
}

TEST_CASE("SQiSW squared is iSWAP") {
  const Matrix4 s = named_gate("SQiSW");
  CHECK(((s * s) - named_gate("iSWAP")).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("SQiSW dagger equals (Z x I) SQiSW (Z x I)") {
  const Matrix4 s = named_gate("SQiSW");
  const Matrix4 zi = kron2(pauli_z(), pauli_i());
  CHECK((named_gate("SQiSWdg") - zi * s * zi).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("unknown gate name throws") {
  CHECK_THROWS_WITH_AS(named_gate("FRED"), "unknown gate",
                       std::invalid_argument);
}

TEST_CASE("named gates are unitary") {
  for (const char* n : {"I", "CNOT", "CZ", "iSWAP", "iSWAPdg", "SQiSW",
                        "SQiSWdg", "SWAP", "SWAPdg", "B"})
    CHECK(is_unitary(named_gate(n)));
}

TEST_CASE("SQiSW commutes with Rz(t) x Rz(t)") {
  const Matrix4 s = named_gate("SQiSW");
  RngStream rng(5);
  for (int i = 0; i < 100; ++i) {
    const double t = rng.next_double() * 4 * kPi;
    const Matrix4 zz = kron2(rz(t), rz(t));
    CHECK((s * zz - zz * s).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("haar sampling is reproducible") {
  RngStream a(0, 0), b(0, 0);
  const Matrix4 u1 = haar_su4(a);
  const Matrix4 u2 = haar_su4(b);
  CHECK((u1 - u2).cwiseAbs().maxCoeff() == 0.0);
  RngStream c(0, 1);
  CHECK((haar_su4(c) - u1).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("haar samples are special unitary") {
  RngStream rng(7);
  for (int i = 0; i < 50; ++i) {
    const Matrix4 u = haar_su4(rng);
    CHECK(is_unitary(u));
    CHECK(std::abs(u.determinant() - Complex(1, 0)) < 1e-9);
  }
  for (int i = 0; i < 50; ++i) {
    const Matrix2 u = haar_su2(rng);
    CHECK(is_unitary(u));
    CHECK(std::abs(u.determinant() - Complex(1, 0)) < 1e-9);
  }
}

TEST_CASE("haar first moment: mean |tr U|^2 = 1") {
  // analytic value of int |tr U|^2 dU over SU(4) is 1
  RngStream rng(11);
  const int n = 100000;
  double sum = 0, sumsq = 0;
  for (int i = 0; i < n; ++i) {
    RngStream s = rng.substream(i);
    const double t = std::abs(haar_su4(s).trace());
    sum += t * t;
    sumsq += t * t * t * t;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sumsq / n - mean * mean) / n);
  CHECK(std::abs(mean - 1.0) < 3 * se);
}

TEST_CASE("average gate fidelity basics") {
  RngStream rng(3);
  const Matrix4 u = haar_su4(rng);
  CHECK(average_gate_fidelity(u, u) == doctest::Approx(1.0).epsilon(1e-12));
  // F(I, iSWAP) = (|1+0+0+1|^2 + 4)/20 = 8/20
  CHECK(average_gate_fidelity(Matrix4::Identity(), named_gate("iSWAP")) ==
        doctest::Approx(0.4).epsilon(1e-12));
  // phase invariance
  const Complex ph = std::exp(Complex(0, 1.234));
  CHECK(average_gate_fidelity(u, Matrix4(ph * u)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // symmetry
  const Matrix4 v = haar_su4(rng);
  CHECK(average_gate_fidelity(u, v) ==
        doctest::Approx(average_gate_fidelity(v, u)).epsilon(1e-12));
}

TEST_CASE("clifford hierarchy: CNOT, SQiSW, SWAP^(1/4)") {
  const auto cnot = clifford_hierarchy_checks(named_gate("CNOT"));
  CHECK(cnot.is_clifford);
  CHECK(cnot.in_level_3);

  const auto sq = clifford_hierarchy_checks(named_gate("SQiSW"));
  CHECK_FALSE(sq.is_clifford);
  CHECK(sq.in_level_3);

  const auto quarter_swap =
      clifford_hierarchy_checks(canonical_gate(kPi / 16, kPi / 16, kPi / 16));
  CHECK_FALSE(quarter_swap.is_clifford);
}

TEST_CASE("unitarity checks") {
  CHECK(is_unitary(named_gate("CNOT")));
  Matrix4 bad = named_gate("CNOT");
  bad(0, 0) = 1.5;
  CHECK_FALSE(is_unitary(bad));
  CHECK_THROWS_AS(require_unitary(bad), std::invalid_argument);
}
