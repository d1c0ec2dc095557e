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

#include <string>
#include <vector>

#include "gbsd/protocol.hpp"

namespace gbsd {

/// One leaf of the branch tree: the classical outcome record and, per
/// hypothesis, the probability of reaching it.
struct BranchEntry {
  OutcomeRecord record;
  std::vector<double> probs;
};

struct VerificationFailure {
  OutcomeRecord record;  // empty for per-hypothesis total violations
  std::string reason;
};

struct VerificationReport {
  bool perfect = false;
  std::vector<BranchEntry> branches;
  std::vector<double> totals;  // per-hypothesis probability over all leaves
  std::vector<VerificationFailure> failures;
};

/// Depth-first enumeration over measurement outcomes. Local unitaries update
/// the states; a measurement applies the party-side projector, and the
/// branch continues unnormalized so a leaf probability is the squared norm
/// of the sequentially projected vector. Branches whose probability is
/// <= tol under every hypothesis are pruned.
std::vector<BranchEntry> simulate_branches(const std::vector<Vector>& states,
                                           const Protocol& protocol,
                                           double tol = 1e-9);

/// perfect == true iff every reachable record has probability > tol under
/// exactly one hypothesis, the decision table names that hypothesis, and
/// each per-hypothesis total is 1 within 1e-9.
VerificationReport verify_perfect_discrimination(const std::vector<Vector>& states,
                                                 const Protocol& protocol,
                                                 double tol = 1e-9);

}  // namespace gbsd
