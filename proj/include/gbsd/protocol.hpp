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

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gbsd/states.hpp"

namespace gbsd {

enum class Party { Alice, Bob };

inline std::string to_string(Party p) { return p == Party::Alice ? "A" : "B"; }

class ProtocolValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symbolic description of a local unitary. Named families keep exact
/// integer parameters so serialized protocols replay without drift;
/// adjoint/transpose compose as conjugate-transpose and transpose.
struct UnitarySpec {
  enum class Family { XPow, ZPow, HAlpha, Explicit };

  Family family = Family::XPow;
  int param = 0;  // power a, b, or alpha
  bool adjoint = false;
  bool transpose = false;
  Matrix explicit_matrix;  // Family::Explicit only

  Matrix realize(int d) const;

  static UnitarySpec x_pow(int a) { return {Family::XPow, a, false, false, {}}; }
  static UnitarySpec z_pow(int b) { return {Family::ZPow, b, false, false, {}}; }
  static UnitarySpec z_pow_transpose(int b) { return {Family::ZPow, b, false, true, {}}; }
  static UnitarySpec h_alpha(int alpha) { return {Family::HAlpha, alpha, false, false, {}}; }
  // (H_alpha^dagger)^t, Bob's side of a conjugation pair
  static UnitarySpec h_alpha_adjoint_transpose(int alpha) {
    return {Family::HAlpha, alpha, true, true, {}};
  }
  static UnitarySpec explicit_matrix_of(Matrix m) {
    return {Family::Explicit, 0, false, false, std::move(m)};
  }

  friend bool operator==(const UnitarySpec& a, const UnitarySpec& b) {
    return a.family == b.family && a.param == b.param && a.adjoint == b.adjoint &&
           a.transpose == b.transpose &&
           a.explicit_matrix.rows() == b.explicit_matrix.rows() &&
           a.explicit_matrix.cols() == b.explicit_matrix.cols() &&
           a.explicit_matrix == b.explicit_matrix;
  }
};

struct LocalUnitary {
  Party party;
  UnitarySpec spec;

  friend bool operator==(const LocalUnitary&, const LocalUnitary&) = default;
};

/// Projective measurement with announced outcome. Each projector is given
/// as a list of orthonormal d-dim vectors (rank = list size).
struct Measurement {
  Party party;
  std::vector<std::vector<Vector>> projectors;

  friend bool operator==(const Measurement& a, const Measurement& b) {
    if (a.party != b.party || a.projectors.size() != b.projectors.size()) return false;
    for (std::size_t i = 0; i < a.projectors.size(); ++i) {
      if (a.projectors[i].size() != b.projectors[i].size()) return false;
      for (std::size_t j = 0; j < a.projectors[i].size(); ++j) {
        const Vector& u = a.projectors[i][j];
        const Vector& v = b.projectors[i][j];
        if (u.size() != v.size() || !(u == v)) return false;
      }
    }
    return true;
  }
};

using ProtocolStep = std::variant<LocalUnitary, Measurement>;

/// Outcome record: (step index, outcome index) per measurement, in order.
using OutcomeRecord = std::vector<std::pair<int, int>>;

/// Ordered LOCC steps plus an explicit decision table from outcome records
/// to hypothesis indices. The table is data, never a formula, so the
/// verifier shares no logic with whatever produced the protocol.
struct Protocol {
  int dim = 0;
  std::vector<ProtocolStep> steps;
  std::vector<std::pair<OutcomeRecord, int>> decision;  // sorted by record

  void set_decision(OutcomeRecord record, int hypothesis);
  std::optional<int> decide(const OutcomeRecord& record) const;
  void sort_decision();

  friend bool operator==(const Protocol&, const Protocol&) = default;
};

/// Checks dimensions, projector orthogonality (P_i P_j = 0 for i != j,
/// within tol) and completeness (sum_i P_i = I within tol).
void validate(const Protocol& protocol, double tol = 1e-10);

}  // namespace gbsd
