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

#include "gbsd/locc_sim.hpp"

#include <cmath>

namespace gbsd {

namespace {

using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Pre-realized step: either a pair of side matrices for a unitary, or the
// projector matrices (plus rank-one vectors when available) of a measurement.
struct RealizedStep {
  bool is_measurement = false;
  Party party = Party::Alice;
  Matrix unitary;                 // unitary only
  std::vector<Matrix> projectors; // measurement only
  std::vector<Vector> rank_one;   // rank-one projector vectors, empty otherwise
};

void apply_side(Party party, const Matrix& op, Vector& state, int d) {
  Eigen::Map<RowMat> psi(state.data(), d, d);
  if (party == Party::Alice)
    psi = (op * psi).eval();
  else
    psi = (psi * op.transpose()).eval();
}

// Projection onto a rank-one |v><v| on one side, without building d x d ops:
// Alice: Psi -> v (v^H Psi);  Bob: Psi -> (Psi conj(v)) v^T.
void project_rank_one(Party party, const Vector& v, const Vector& in, Vector& out, int d) {
  Eigen::Map<const RowMat> psi(in.data(), d, d);
  Eigen::Map<RowMat> res(out.data(), d, d);
  if (party == Party::Alice) {
    Eigen::RowVectorXcd w = v.adjoint() * psi;
    res.noalias() = v * w;
  } else {
    Vector w = psi * v.conjugate();
    res.noalias() = w * v.transpose();
  }
}

struct Simulator {
  const Protocol& protocol;
  int d;
  double tol;
  std::vector<RealizedStep> realized;
  std::vector<BranchEntry> leaves;
  OutcomeRecord record;

  Simulator(const Protocol& p, double t) : protocol(p), d(p.dim), tol(t) {
    realized.reserve(p.steps.size());
    for (const auto& step : p.steps) {
      RealizedStep r;
      if (const auto* u = std::get_if<LocalUnitary>(&step)) {
        r.party = u->party;
        r.unitary = u->spec.realize(d);
      } else {
        const auto& meas = std::get<Measurement>(step);
        r.is_measurement = true;
        r.party = meas.party;
        bool all_rank_one = true;
        for (const auto& vectors : meas.projectors) {
          Matrix p_mat = Matrix::Zero(d, d);
          for (const auto& v : vectors) p_mat += v * v.adjoint();
          r.projectors.push_back(std::move(p_mat));
          if (vectors.size() == 1)
            r.rank_one.push_back(vectors.front());
          else
            all_rank_one = false;
        }
        if (!all_rank_one) r.rank_one.clear();
      }
      realized.push_back(std::move(r));
    }
  }

  void run(std::vector<Vector> states) {
    dfs(0, std::move(states));
  }

  void dfs(std::size_t step_idx, std::vector<Vector> states) {
    while (step_idx < realized.size() && !realized[step_idx].is_measurement) {
      const auto& r = realized[step_idx];
      for (auto& s : states) apply_side(r.party, r.unitary, s, d);
      ++step_idx;
    }
    if (step_idx == realized.size()) {
      BranchEntry leaf;
      leaf.record = record;
      leaf.probs.reserve(states.size());
      for (const auto& s : states) leaf.probs.push_back(s.squaredNorm());
      leaves.push_back(std::move(leaf));
      return;
    }
    const auto& r = realized[step_idx];
    const int outcomes = static_cast<int>(r.projectors.size());
    std::vector<Vector> projected(states.size(), Vector(states.front().size()));
    for (int o = 0; o < outcomes; ++o) {
      double max_prob = 0.0;
      for (std::size_t h = 0; h < states.size(); ++h) {
        if (!r.rank_one.empty())
          project_rank_one(r.party, r.rank_one[o], states[h], projected[h], d);
        else {
          projected[h] = states[h];
          apply_side(r.party, r.projectors[o], projected[h], d);
        }
        max_prob = std::max(max_prob, projected[h].squaredNorm());
      }
      if (max_prob <= tol) continue;
      record.emplace_back(static_cast<int>(step_idx), o);
      dfs(step_idx + 1, projected);
      record.pop_back();
    }
  }
};

}  // namespace

std::vector<BranchEntry> simulate_branches(const std::vector<Vector>& states,
                                           const Protocol& protocol, double tol) {
  validate(protocol);
  const auto dim2 = static_cast<Eigen::Index>(protocol.dim) * protocol.dim;
  if (states.empty()) throw std::invalid_argument("simulate_branches: no states");
  for (const auto& s : states)
    if (s.size() != dim2)
      throw std::invalid_argument("simulate_branches: state dim must be d^2");
  Simulator sim(protocol, tol);
  sim.run(states);
  return std::move(sim.leaves);
}

VerificationReport verify_perfect_discrimination(const std::vector<Vector>& states,
                                                 const Protocol& protocol,
                                                 double tol) {
  VerificationReport report;
  report.branches = simulate_branches(states, protocol, tol);
  report.totals.assign(states.size(), 0.0);
  for (const auto& leaf : report.branches) {
    int support = -1;
    int support_count = 0;
    for (std::size_t h = 0; h < leaf.probs.size(); ++h) {
      report.totals[h] += leaf.probs[h];
      if (leaf.probs[h] > tol) {
        support = static_cast<int>(h);
        ++support_count;
      }
    }
    if (support_count != 1) {
      report.failures.push_back(
          {leaf.record, "record is reachable under " + std::to_string(support_count) +
                            " hypotheses"});
      continue;
    }
    const auto decided = protocol.decide(leaf.record);
    if (!decided) {
      report.failures.push_back({leaf.record, "no decision for reachable record"});
    } else if (*decided != support) {
      report.failures.push_back(
          {leaf.record, "decision names hypothesis " + std::to_string(*decided) +
                            " but only " + std::to_string(support) + " is consistent"});
    }
  }
  constexpr double kTotalTol = 1e-9;
  for (std::size_t h = 0; h < report.totals.size(); ++h) {
    if (std::abs(report.totals[h] - 1.0) > kTotalTol) {
      report.failures.push_back(
          {{}, "hypothesis " + std::to_string(h) + " total probability " +
                   std::to_string(report.totals[h]) + " deviates from 1"});
    }
  }
  report.perfect = report.failures.empty();
  return report;
}

}  // namespace gbsd
