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

#include <Eigen/Dense>
#include <complex>

#include "gbsd/weyl.hpp"

namespace gbsd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// exp(2*pi*i*e/d) for an exact integer exponent e (reduced mod d first).
Complex root_of_unity(long long e, int d);

/// Cyclic shift X = sum_l |l+1 mod d><l|.
Matrix build_x(int d);

/// Clock Z = sum_i w^i |i><i|.
Matrix build_z(int d);

/// Normalized transform with entries (1/sqrt(d)) * w^{-jk - alpha*s_k}.
/// Unitary for every alpha in [0, d), not only parity-valid ones.
Matrix build_h(int alpha, int d);

/// Dense matrix of w^t X^a Z^b. Only d entries are nonzero:
/// (X^a Z^b)|i> = w^{bi} |i+a>.
Matrix weyl_matrix(const WeylOp& op);

/// Canonical maximally entangled state (1/sqrt(d)) sum_i |ii>.
/// Amplitude index convention: (Alice index)*d + (Bob index).
Vector psi0(int d);

/// |psi_{m,n}> = (X^m Z^n (x) I)|psi0>, amplitudes (1/sqrt(d)) w^{ni}
/// on basis |i+m mod d>|i>.
Vector gbs_state(int d, int m, int n);
Vector gbs_state(const GbsIndex& idx);

/// (a (x) b) s on a bipartite d^2 vector.
Vector apply_local(const Matrix& a, const Matrix& b, const Vector& s);

/// Max elementwise deviation between (M (x) I)|psi0> and (I (x) M^t)|psi0>.
/// The two sides agree for every square matrix M.
double ricochet_deviation(const Matrix& m);

/// Deviation after aligning v to u by the unit phase maximizing the real
/// part of <u, v>. Near zero iff u and v agree up to a global phase.
double phase_aligned_deviation(const Vector& u, const Vector& v);

/// Same comparison for matrices, aligned via the Frobenius inner product.
double phase_aligned_deviation(const Matrix& a, const Matrix& b);

}  // namespace gbsd
