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
#include "gbsd/weyl.hpp"
#include "oracles.hpp"

using namespace gbsd;

namespace {

WeylOp make_op(int t, int a, int b, int d) {
  return {Residue(a, d), Residue(b, d), Residue(t, d)};
}

}  // namespace

TEST_CASE("s_sum evaluates the tail sums and the boundary convention") {
  CHECK(s_sum(0, 4) == 6);  // 0+1+2+3
  CHECK(s_sum(4, 4) == 6);  // s_d = s_0 = d(d-1)/2
  CHECK(s_sum(4, 5) == 4);  // single-term sum
  CHECK(s_sum(1, 4) == 6);  // 1+2+3
  CHECK(s_sum(3, 4) == 3);
  for (int d = 2; d <= 12; ++d) {
    long long direct = 0;
    for (int i = 0; i < d; ++i) direct += i;
    CHECK(s_sum(0, d) == direct);
    CHECK(s_sum(d, d) == s_sum(0, d));
    for (int k = 0; k < d; ++k) {
      long long tail = 0;
      for (int i = k; i < d; ++i) tail += i;
      CHECK(s_sum(k, d) == tail);
    }
  }
  CHECK_THROWS_AS(s_sum(-1, 4), std::invalid_argument);
  CHECK_THROWS_AS(s_sum(5, 4), std::invalid_argument);
}

TEST_CASE("compose produces the normal form") {
  // X then Z is already in normal form
  const WeylOp xz = compose(make_op(0, 1, 0, 4), make_op(0, 0, 1, 4));
  CHECK(xz == make_op(0, 1, 1, 4));
  // Z then X picks up one clock phase: ZX = wXZ, confirmed against matrices
  const WeylOp zx = compose(make_op(0, 0, 1, 4), make_op(0, 1, 0, 4));
  CHECK(zx == make_op(1, 1, 1, 4));
  const Matrix direct = build_z(4) * build_x(4);
  CHECK((direct - weyl_matrix(zx)).cwiseAbs().maxCoeff() < 1e-12);
  // group inverse
  const WeylOp a = make_op(2, 3, 1, 5);
  CHECK(compose(a, adjoint(a)) == WeylOp::identity(5));
  CHECK(compose(adjoint(a), a) == WeylOp::identity(5));
  CHECK_THROWS_AS(compose(make_op(0, 1, 0, 4), make_op(0, 1, 0, 5)),
                  std::invalid_argument);
}

TEST_CASE("adjoint matches the conjugate transpose and is an involution") {
  CHECK(adjoint(WeylOp::identity(4)) == WeylOp::identity(4));
  CHECK(adjoint(make_op(0, 1, 0, 4)) == make_op(0, 3, 0, 4));  // X^dagger = X^{d-1}
  const WeylOp xz = make_op(0, 1, 1, 4);
  const Matrix adj = weyl_matrix(adjoint(xz));
  CHECK((adj - weyl_matrix(xz).adjoint()).cwiseAbs().maxCoeff() < 1e-12);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dims(2, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = dims(rng);
    std::uniform_int_distribution<int> exp(0, d - 1);
    const WeylOp op = make_op(exp(rng), exp(rng), exp(rng), d);
    CHECK(adjoint(adjoint(op)) == op);
  }
}

TEST_CASE("group laws hold on random triples") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dims(2, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = dims(rng);
    std::uniform_int_distribution<int> exp(0, d - 1);
    const WeylOp a = make_op(exp(rng), exp(rng), exp(rng), d);
    const WeylOp b = make_op(exp(rng), exp(rng), exp(rng), d);
    const WeylOp c = make_op(exp(rng), exp(rng), exp(rng), d);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, WeylOp::identity(d)) == a);
    CHECK(compose(WeylOp::identity(d), a) == a);
  }
}

TEST_CASE("symbolic composition agrees with matrix multiplication") {
  std::mt19937 rng(13);
  for (int d = 2; d <= 7; ++d) {
    std::uniform_int_distribution<int> exp(0, d - 1);
    for (int trial = 0; trial < 60; ++trial) {
      const WeylOp a = make_op(exp(rng), exp(rng), exp(rng), d);
      const WeylOp b = make_op(exp(rng), exp(rng), exp(rng), d);
      const Matrix product = weyl_matrix(a) * weyl_matrix(b);
      CHECK((product - weyl_matrix(compose(a, b))).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("h_alpha_valid gates on the parity condition") {
  CHECK(h_alpha_valid(1, 5));
  CHECK_FALSE(h_alpha_valid(1, 6));
  CHECK(h_alpha_valid(2, 8));
  CHECK(h_alpha_valid(0, 6));
  for (int alpha = 0; alpha < 7; ++alpha) CHECK(h_alpha_valid(alpha, 7));
}

TEST_CASE("conjugate_by_h label map") {
  SUBCASE("alpha = 0 swaps shift and clock roles") {
    for (int d : {4, 5, 6, 9}) {
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          const GbsIndex out = conjugate_by_h(Residue(0, d), GbsIndex(m, n, d));
          CHECK(out == GbsIndex(n, (d - m) % d, d));
        }
    }
  }
  SUBCASE("alpha = 1 at d = 5 maps X to the projective form of Z^{-1}X") {
    CHECK(conjugate_by_h(Residue(1, 5), GbsIndex(1, 0, 5)) == GbsIndex(1, 4, 5));
  }
  SUBCASE("alpha = 2 at d = 6 maps clock powers to shift powers") {
    for (int n = 0; n < 6; ++n)
      CHECK(conjugate_by_h(Residue(2, 6), GbsIndex(0, n, 6)) == GbsIndex(n, 0, 6));
  }
  SUBCASE("invalid parity is rejected") {
    CHECK_THROWS_AS(conjugate_by_h(Residue(1, 6), GbsIndex(1, 0, 6)),
                    std::invalid_argument);
  }
  SUBCASE("applying alpha = 0 twice negates both labels") {
    for (int d : {4, 7, 10}) {
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          const GbsIndex once = conjugate_by_h(Residue(0, d), GbsIndex(m, n, d));
          const GbsIndex twice = conjugate_by_h(Residue(0, d), once);
          CHECK(twice == GbsIndex((d - m) % d, (d - n) % d, d));
        }
    }
  }
}

TEST_CASE("conjugation identity holds at matrix level for valid alpha") {
  for (int d = 2; d <= 12; ++d) {
    for (int alpha = 0; alpha < d; ++alpha) {
      if (!h_alpha_valid(alpha, d)) continue;
      const Matrix h = build_h(alpha, d);
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          const Matrix lhs = h * weyl_matrix(make_op(0, m, n, d)) * h.adjoint();
          const GbsIndex mapped = conjugate_by_h(Residue(alpha, d), GbsIndex(m, n, d));
          const Matrix rhs = weyl_matrix(make_op(0, mapped.m.value(), mapped.n.value(), d));
          CHECK(phase_aligned_deviation(lhs, rhs) < 1e-10);
        }
    }
  }
}

TEST_CASE("odd alpha at even d breaks the conjugation identity somewhere") {
  for (int d = 2; d <= 12; d += 2) {
    bool found = false;
    for (int alpha = 1; alpha < d && !found; alpha += 2) {
      const Matrix h = build_h(alpha, d);
      for (int m = 0; m < d && !found; ++m)
        for (int n = 0; n < d && !found; ++n) {
          const Matrix lhs = h * weyl_matrix(make_op(0, m, n, d)) * h.adjoint();
          const Matrix rhs = weyl_matrix(
              make_op(0, (alpha * m + n) % d, ((d - m) % d + d) % d, d));
          if (phase_aligned_deviation(lhs, rhs) > 0.1) found = true;
        }
    }
    CHECK_MESSAGE(found, "no parity counterexample at d = ", d);
  }
}
