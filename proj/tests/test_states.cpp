// Copyright 2026 The gbsd authors
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

#include <doctest.h>

#include <random>

#include "gbsd/states.hpp"
#include "oracles.hpp"

using namespace gbsd;

TEST_CASE("build_x and build_z realize the shift and clock") {
  const Matrix x2 = build_x(2);
  CHECK(x2(0, 1) == Complex(1, 0));
  CHECK(x2(1, 0) == Complex(1, 0));
  CHECK(x2(0, 0) == Complex(0, 0));

  const Matrix z2 = build_z(2);
  CHECK(std::abs(z2(0, 0) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(z2(1, 1) - Complex(-1, 0)) < 1e-15);

  // X^d = I
  const Matrix x4 = build_x(4);
  CHECK((testing::matrix_pow(x4, 4) - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-12);

  CHECK_THROWS_AS(build_x(1), std::invalid_argument);
  CHECK_THROWS_AS(build_z(0), std::invalid_argument);
}

TEST_CASE("weyl_matrix equals the explicit w^t X^a Z^b product") {
  for (int d = 2; d <= 9; ++d) {
    const Matrix x = build_x(d);
    const Matrix z = build_z(d);
    for (int t = 0; t < d; ++t)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          const Matrix expected = root_of_unity(t, d) * testing::matrix_pow(x, a) *
                                  testing::matrix_pow(z, b);
          const Matrix got =
              weyl_matrix({Residue(a, d), Residue(b, d), Residue(t, d)});
          CHECK((expected - got).cwiseAbs().maxCoeff() < 1e-12);
        }
  }
}

TEST_CASE("clock and shift obey ZX = wXZ") {
  for (int d = 2; d <= 10; ++d) {
    const Matrix lhs = build_z(d) * build_x(d);
    const Matrix rhs = root_of_unity(1, d) * build_x(d) * build_z(d);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("build_h realizes the entry formula") {
  SUBCASE("alpha = 0 at d = 2 is the real Hadamard") {
    const Matrix h = build_h(0, 2);
    const double inv = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(h(0, 0) - inv) < 1e-15);
    CHECK(std::abs(h(0, 1) - inv) < 1e-15);
    CHECK(std::abs(h(1, 0) - inv) < 1e-15);
    CHECK(std::abs(h(1, 1) + inv) < 1e-15);
  }
  SUBCASE("column k = 1 of H_1 at d = 4 carries exponents -j - s_1") {
    const Matrix h = build_h(1, 4);
    CHECK(s_sum(1, 4) == 6);
    for (int j = 0; j < 4; ++j) {
      const Complex expected = 0.5 * root_of_unity(-j - 6, 4);
      CHECK(std::abs(h(j, 1) - expected) < 1e-14);
    }
  }
  SUBCASE("unitary for every alpha") {
    for (int d = 2; d <= 12; ++d)
      for (int alpha = 0; alpha < d; ++alpha) {
        const Matrix h = build_h(alpha, d);
        CHECK((h * h.adjoint() - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-10);
      }
  }
  CHECK_THROWS_AS(build_h(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_h(-1, 4), std::invalid_argument);
}

TEST_CASE("gbs_state amplitudes") {
  SUBCASE("the canonical state is uniform on |ii>") {
    const Vector s = gbs_state(4, 0, 0);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const Complex amp = s(a * 4 + b);
        if (a == b)
          CHECK(std::abs(amp - 0.5) < 1e-15);
        else
          CHECK(std::abs(amp) < 1e-15);
      }
  }
  SUBCASE("matches (X^m Z^n (x) I)|psi0> built from matrices") {
    for (int d : {2, 3, 4, 5, 6}) {
      const Matrix id = Matrix::Identity(d, d);
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          const Matrix u = testing::matrix_pow(build_x(d), m) *
                           testing::matrix_pow(build_z(d), n);
          const Vector expected = testing::kron(u, id) * psi0(d);
          CHECK((gbs_state(d, m, n) - expected).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
  }
  SUBCASE("the shift-by-n state at d = 2n lies on |i+n>|i> uniformly") {
    const Vector s = gbs_state(4, 2, 0);
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(s(((i + 2) % 4) * 4 + i) - 0.5) < 1e-15);
  }
  SUBCASE("the d^2 states are orthonormal") {
    for (int d = 2; d <= 10; ++d) {
      std::vector<Vector> states;
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) states.push_back(gbs_state(d, m, n));
      for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = 0; j < states.size(); ++j) {
          const Complex ip = states[i].dot(states[j]);
          const Complex expected = (i == j) ? Complex(1, 0) : Complex(0, 0);
          CHECK(std::abs(ip - expected) < 1e-12);
        }
    }
  }
  CHECK_THROWS_AS(gbs_state(4, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(gbs_state(4, 0, -1), std::invalid_argument);
}

TEST_CASE("apply_local") {
  std::mt19937 rng(3);
  SUBCASE("identity pair is a no-op") {
    const Vector s = testing::random_state(16, rng);
    const Matrix id = Matrix::Identity(4, 4);
    CHECK((apply_local(id, id, s) - s).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("agrees with the Kronecker product on random input") {
    for (int d : {2, 3, 5}) {
      for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = testing::random_complex_matrix(d, rng);
        const Matrix b = testing::random_complex_matrix(d, rng);
        const Vector s = testing::random_state(d * d, rng);
        const Vector expected = testing::kron(a, b) * s;
        CHECK((apply_local(a, b, s) - expected).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
  SUBCASE("the H pair conjugation moves labels as the symbolic map says") {
    for (int d : {4, 5, 6, 8}) {
      for (int alpha = 0; alpha < d; ++alpha) {
        if (!h_alpha_valid(alpha, d)) continue;
        const Matrix h = build_h(alpha, d);
        const Matrix bob = h.adjoint().transpose();
        for (int m = 0; m < d; ++m)
          for (int n = 0; n < d; ++n) {
            const Vector moved = apply_local(h, bob, gbs_state(d, m, n));
            const GbsIndex target = conjugate_by_h(Residue(alpha, d), GbsIndex(m, n, d));
            CHECK(phase_aligned_deviation(gbs_state(target), moved) < 1e-10);
          }
      }
    }
  }
  SUBCASE("the X/Z pair of the label reduction maps onto |psi0>") {
    const int d = 6;
    const int m1 = 2, n2 = 5;
    const Matrix a =
        weyl_matrix({Residue(-m1, d), Residue(0, d), Residue(0, d)});
    const Matrix b =
        weyl_matrix({Residue(0, d), Residue(-n2, d), Residue(0, d)}).transpose();
    const Vector moved = apply_local(a, b, gbs_state(d, m1, n2));
    CHECK(phase_aligned_deviation(psi0(d), moved) < 1e-12);
  }
  CHECK_THROWS_AS(apply_local(Matrix::Identity(3, 3), Matrix::Identity(4, 4),
                              psi0(4)),
                  std::invalid_argument);
}

TEST_CASE("ricochet identity") {
  CHECK(ricochet_deviation(Matrix::Identity(4, 4)) == 0.0);
  CHECK(ricochet_deviation(build_x(4)) < 1e-12);
  CHECK(ricochet_deviation(build_h(2, 6)) < 1e-12);
  std::mt19937 rng(5);
  for (int d = 2; d <= 10; ++d)
    for (int trial = 0; trial < 100; ++trial)
      CHECK(ricochet_deviation(testing::random_complex_matrix(d, rng)) < 1e-12);
}

TEST_CASE("phase_aligned_deviation") {
  std::mt19937 rng(9);
  const Vector v = testing::random_state(12, rng);
  const Vector rotated = v * root_of_unity(5, 7);
  CHECK(phase_aligned_deviation(v, rotated) < 1e-12);
  Vector other = testing::random_state(12, rng);
  CHECK(phase_aligned_deviation(v, other) > 1e-3);
}
