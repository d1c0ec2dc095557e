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

#include "gbsd/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gbsd {

Complex root_of_unity(long long e, int d) {
  const long long r = ((e % d) + d) % d;
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) / d;
  return {std::cos(theta), std::sin(theta)};
}

Matrix build_x(int d) {
  if (d < 2) throw std::invalid_argument("build_x: d must be >= 2");
  Matrix x = Matrix::Zero(d, d);
  for (int l = 0; l < d; ++l) x((l + 1) % d, l) = 1.0;
  return x;
}

Matrix build_z(int d) {
  if (d < 2) throw std::invalid_argument("build_z: d must be >= 2");
  Matrix z = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) z(i, i) = root_of_unity(i, d);
  return z;
}

Matrix build_h(int alpha, int d) {
  if (d < 2) throw std::invalid_argument("build_h: d must be >= 2");
  if (alpha < 0 || alpha >= d)
    throw std::invalid_argument("build_h: alpha must lie in [0, d)");
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  Matrix h(d, d);
  for (int k = 0; k < d; ++k) {
    const long long sk = s_sum(k, d);
    for (int j = 0; j < d; ++j) {
      h(j, k) = norm * root_of_unity(-static_cast<long long>(j) * k -
                                         static_cast<long long>(alpha) * sk,
                                     d);
    }
  }
  return h;
}

Matrix weyl_matrix(const WeylOp& op) {
  const int d = op.dim();
  const int a = op.x_exp.value();
  const int b = op.z_exp.value();
  const int t = op.phase_exp.value();
  Matrix m = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    m((i + a) % d, i) = root_of_unity(t + static_cast<long long>(b) * i, d);
  return m;
}

Vector psi0(int d) {
  if (d < 2) throw std::invalid_argument("psi0: d must be >= 2");
  Vector s = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) s(static_cast<Eigen::Index>(i) * d + i) = amp;
  return s;
}

Vector gbs_state(int d, int m, int n) {
  if (d < 2) throw std::invalid_argument("gbs_state: d must be >= 2");
  if (m < 0 || m >= d || n < 0 || n >= d)
    throw std::invalid_argument("gbs_state: indices must lie in [0, d)");
  Vector s = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) {
    const int row = (i + m) % d;
    s(static_cast<Eigen::Index>(row) * d + i) =
        amp * root_of_unity(static_cast<long long>(n) * i, d);
  }
  return s;
}

Vector gbs_state(const GbsIndex& idx) {
  return gbs_state(idx.dim(), idx.m.value(), idx.n.value());
}

Vector apply_local(const Matrix& a, const Matrix& b, const Vector& s) {
  const int d = static_cast<int>(a.rows());
  if (a.cols() != d || b.rows() != d || b.cols() != d)
    throw std::invalid_argument("apply_local: operators must be square and equal-dim");
  if (s.size() != static_cast<Eigen::Index>(d) * d)
    throw std::invalid_argument("apply_local: state dim must be d^2");
  // With amplitude index (Alice)*d + (Bob), the state reshapes row-major to
  // a d x d matrix Psi and (a (x) b) s = vec(a * Psi * b^t).
  using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMat> psi(s.data(), d, d);
  RowMat out = a * psi * b.transpose();
  return Eigen::Map<const Vector>(out.data(), s.size());
}

double ricochet_deviation(const Matrix& m) {
  const int d = static_cast<int>(m.rows());
  if (m.cols() != d) throw std::invalid_argument("ricochet_deviation: square matrix expected");
  const Vector base = psi0(d);
  const Matrix id = Matrix::Identity(d, d);
  const Vector lhs = apply_local(m, id, base);
  const Vector rhs = apply_local(id, m.transpose(), base);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

double phase_aligned_deviation(const Vector& u, const Vector& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("phase_aligned_deviation: size mismatch");
  const Complex ip = u.dot(v);  // conj(u) . v
  Complex phase = 1.0;
  if (std::abs(ip) > 0.0) phase = ip / std::abs(ip);
  return (u - v / phase).cwiseAbs().maxCoeff();
}

double phase_aligned_deviation(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("phase_aligned_deviation: shape mismatch");
  const Complex ip = (a.adjoint() * b).trace();
  Complex phase = 1.0;
  if (std::abs(ip) > 0.0) phase = ip / std::abs(ip);
  return (a - b / phase).cwiseAbs().maxCoeff();
}

}  // namespace gbsd
