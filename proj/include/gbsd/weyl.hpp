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

#pragma once

#include <stdexcept>

#include "gbsd/residue.hpp"

namespace gbsd {

/// An element of the discrete Weyl-Heisenberg group mod d, stored in the
/// normal form w^t X^a Z^b (X left of Z). The unique representation makes
/// structural equality meaningful; every operation re-normalizes eagerly.
struct WeylOp {
  Residue x_exp;      // a, power of the cyclic shift X
  Residue z_exp;      // b, power of the clock Z
  Residue phase_exp;  // t, power of w = exp(2*pi*i/d)

  int dim() const { return x_exp.modulus(); }

  static WeylOp identity(int d) {
    return {Residue(0, d), Residue(0, d), Residue(0, d)};
  }

  friend bool operator==(const WeylOp&, const WeylOp&) = default;
};

/// Phase-forgetting label (m, n) of the generalized Bell state X^m Z^n.
/// The d^2 labels are pairwise distinct; equality is exact on both residues.
struct GbsIndex {
  Residue m;
  Residue n;

  int dim() const { return m.modulus(); }

  GbsIndex() = default;
  GbsIndex(int m_, int n_, int d) : m(m_, d), n(n_, d) {}
  GbsIndex(Residue m_, Residue n_) : m(m_), n(n_) {
    if (m.modulus() != n.modulus())
      throw std::invalid_argument("GbsIndex: modulus mismatch");
  }

  friend bool operator==(const GbsIndex&, const GbsIndex&) = default;
  friend auto operator<=>(const GbsIndex&, const GbsIndex&) = default;
};

/// s_k = k + (k+1) + ... + (d-1), with the boundary convention
/// s_d = s_0 = d(d-1)/2.
inline long long s_sum(int k, int d) {
  if (d < 2) throw std::invalid_argument("s_sum: d must be >= 2");
  if (k < 0 || k > d) throw std::invalid_argument("s_sum: k must lie in [0, d]");
  if (k == d) k = 0;
  // sum of k..d-1
  return static_cast<long long>(d - k) * (k + d - 1) / 2;
}

/// Exact product a*b in normal form: the commutation Z^b X^a = w^{ab} X^a Z^b
/// gives (w^{t1}X^{a1}Z^{b1})(w^{t2}X^{a2}Z^{b2})
///     = w^{t1+t2+b1*a2} X^{a1+a2} Z^{b1+b2}.
inline WeylOp compose(const WeylOp& a, const WeylOp& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("compose: dim mismatch");
  return {a.x_exp + b.x_exp, a.z_exp + b.z_exp,
          a.phase_exp + b.phase_exp + a.z_exp * b.x_exp};
}

/// (w^t X^a Z^b)^dagger = w^{-t+ab} X^{-a} Z^{-b}.
inline WeylOp adjoint(const WeylOp& a) {
  return {-a.x_exp, -a.z_exp, -a.phase_exp + a.x_exp * a.z_exp};
}

/// Parity condition under which the H_alpha conjugation identity holds:
/// every alpha when d is odd, even alpha when d is even.
inline bool h_alpha_valid(int alpha, int d) {
  if (d % 2 == 1) return true;
  return alpha % 2 == 0;
}

inline bool h_alpha_valid(const Residue& alpha, int d) {
  return h_alpha_valid(alpha.value(), d);
}

/// Label map of conjugation by H_alpha: (m, n) -> (alpha*m + n, -m).
/// The conjugation identity holds only up to a global phase, and local
/// distinguishability is phase-insensitive, so the phase is dropped here.
inline GbsIndex conjugate_by_h(const Residue& alpha, const GbsIndex& idx) {
  const int d = idx.dim();
  if (alpha.modulus() != d)
    throw std::invalid_argument("conjugate_by_h: modulus mismatch");
  if (!h_alpha_valid(alpha, d))
    throw std::invalid_argument(
        "conjugate_by_h: H_alpha conjugation needs even alpha when d is even");
  return GbsIndex(alpha * idx.m + idx.n, -idx.m);
}

/// Label map of left multiplication by X^a: (m, n) -> (m + a, n).
inline GbsIndex left_mul_x(const Residue& a, const GbsIndex& idx) {
  return GbsIndex(idx.m + a, idx.n);
}

/// Label map of left multiplication by Z^b: Z^b X^m Z^n = w^{bm} X^m Z^{n+b},
/// so projectively (m, n) -> (m, n + b).
inline GbsIndex left_mul_z(const Residue& b, const GbsIndex& idx) {
  return GbsIndex(idx.m, idx.n + b);
}

/// Phase-forgetting image of a Weyl operator.
inline GbsIndex projective(const WeylOp& op) { return GbsIndex(op.x_exp, op.z_exp); }

}  // namespace gbsd
