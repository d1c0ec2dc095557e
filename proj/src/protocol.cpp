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

#include "gbsd/protocol.hpp"

namespace gbsd {

Matrix UnitarySpec::realize(int d) const {
  Matrix m;
  switch (family) {
    case Family::XPow:
      m = weyl_matrix({Residue(param, d), Residue(0, d), Residue(0, d)});
      break;
    case Family::ZPow:
      m = weyl_matrix({Residue(0, d), Residue(param, d), Residue(0, d)});
      break;
    case Family::HAlpha:
      m = build_h(((param % d) + d) % d, d);
      break;
    case Family::Explicit:
      if (explicit_matrix.rows() != d || explicit_matrix.cols() != d)
        throw ProtocolValidationError("explicit unitary has wrong dimension");
      m = explicit_matrix;
      break;
  }
  if (adjoint) m = m.adjoint().eval();
  if (transpose) m = m.transpose().eval();
  return m;
}

void Protocol::set_decision(OutcomeRecord record, int hypothesis) {
  decision.emplace_back(std::move(record), hypothesis);
}

std::optional<int> Protocol::decide(const OutcomeRecord& record) const {
  auto it = std::lower_bound(
      decision.begin(), decision.end(), record,
      [](const auto& entry, const OutcomeRecord& key) { return entry.first < key; });
  if (it == decision.end() || it->first != record) return std::nullopt;
  return it->second;
}

void Protocol::sort_decision() {
  std::sort(decision.begin(), decision.end());
  auto dup = std::adjacent_find(
      decision.begin(), decision.end(),
      [](const auto& a, const auto& b) { return a.first == b.first; });
  if (dup != decision.end())
    throw ProtocolValidationError("decision table has a duplicated record");
}

void validate(const Protocol& protocol, double tol) {
  const int d = protocol.dim;
  if (d < 2) throw ProtocolValidationError("protocol dim must be >= 2");
  for (const auto& step : protocol.steps) {
    if (const auto* u = std::get_if<LocalUnitary>(&step)) {
      const Matrix m = u->spec.realize(d);
      if ((m * m.adjoint() - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol)
        throw ProtocolValidationError("local operator is not unitary");
      continue;
    }
    const auto& meas = std::get<Measurement>(step);
    if (meas.projectors.empty())
      throw ProtocolValidationError("measurement with no outcomes");
    Matrix sum = Matrix::Zero(d, d);
    std::vector<Matrix> mats;
    mats.reserve(meas.projectors.size());
    for (const auto& vectors : meas.projectors) {
      Matrix p = Matrix::Zero(d, d);
      for (const auto& v : vectors) {
        if (v.size() != d)
          throw ProtocolValidationError("projector vector has wrong dimension");
        p += v * v.adjoint();
      }
      mats.push_back(p);
      sum += p;
    }
    for (std::size_t i = 0; i < mats.size(); ++i) {
      if ((mats[i] * mats[i] - mats[i]).cwiseAbs().maxCoeff() > tol)
        throw ProtocolValidationError("projector is not idempotent");
      for (std::size_t j = i + 1; j < mats.size(); ++j) {
        if ((mats[i] * mats[j]).cwiseAbs().maxCoeff() > tol)
          throw ProtocolValidationError("projectors are not mutually orthogonal");
      }
    }
    if ((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol)
      throw ProtocolValidationError("measurement is not complete");
  }
}

}  // namespace gbsd
