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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gbsd/protocol.hpp"
#include "gbsd/weyl.hpp"

namespace gbsd {

class NotApplicableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedDimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Three pairwise-distinct state labels in dimension d. Synthesis requires
/// d >= 4; reduction-only queries accept d >= 2.
struct Triple {
  Triple(int d, GbsIndex a, GbsIndex b, GbsIndex c);

  int dim() const { return indices[0].dim(); }

  std::array<GbsIndex, 3> indices;
};

/// One exact move of the label-reduction calculus. Each kind corresponds to
/// a concrete local unitary pair whose induced map on labels is the
/// recorded map, so a trace can be replayed with residue arithmetic alone.
struct ReductionStep {
  enum class Kind { LeftMulX, LeftMulZ, ConjH };

  Kind kind;
  Residue param;

  GbsIndex apply(const GbsIndex& idx) const;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

enum class Route {
  AllMDistinct,
  AllNDistinctH0,
  CaseI_i,
  CaseI_ii,
  CaseII_i,
  CaseII_ii_1,
  CaseII_iii,
  Exceptional1,
  Exceptional2,
  FourierToExceptional2,
  ExternalSingal_d4,
};

std::string to_string(Route route);
Route route_from_string(const std::string& name);

/// Replayable account of which branch of the case analysis produced the
/// protocol: the route, the exact reduction trace, and the label triple
/// reached after the trace (in input hypothesis order).
struct Certificate {
  Route route = Route::AllMDistinct;
  std::vector<ReductionStep> trace;
  std::array<GbsIndex, 3> canonical;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Applies the trace to a label triple, element by element.
std::array<GbsIndex, 3> replay_trace(const std::vector<ReductionStep>& trace,
                                     std::array<GbsIndex, 3> indices);

struct SynthesisResult {
  std::optional<Protocol> protocol;  // empty iff route == ExternalSingal_d4
  Certificate certificate;
};

/// Reorders a triple with an m-collision and an n-collision into the form
/// (m1,n1), (m1,n2), (m2,n2) with n1 != n2 and m2 != m1: the pair sharing
/// an m-value is located, and the member sharing its n-value with the third
/// state goes in the middle. Throws NotApplicableError when all m or all n
/// are distinct (those triples never need the reduction).
std::array<GbsIndex, 3> order_for_reduction(const Triple& t);

struct CanonicalReduction {
  Residue m;  // canonical X power, 0 < m < d
  Residue n;  // canonical Z power, 0 < n < d
  std::vector<ReductionStep> trace;
  std::array<GbsIndex, 3> ordered;  // the order_for_reduction output
};

/// Left-multiplies the ordered triple by X^{-m1} Z^{-n2} so that it becomes
/// {Z^{n1-n2}, I, X^{m2-m1}}; returns canonical m = m2-m1, n = n1-n2 and the
/// exact trace.
CanonicalReduction reduce_to_canonical(const Triple& t);

/// Measure-and-announce protocol for labels with pairwise-distinct m:
/// Alice and Bob both measure the computational basis; outcome (j, b)
/// identifies the unique i with b = j - m_i mod d.
Protocol distinct_shift_protocol(int d, const std::vector<GbsIndex>& states);

/// Protocol for the family {I, X^n, Z^n} at d = 2n (hypotheses in that
/// order): Alice measures the two-level superposition pairs
/// (|2k-2> +- |2k-1>), Bob measures the same pair basis, and the decision
/// table separates the three residual Bob states per branch.
Protocol exceptional1_protocol(int n);

/// Protocol for the family {I, X^{3k}, Z^{2k}} at d = 4k, k >= 2. The k = 1
/// instance is refused: its residual Bob states are not orthogonal, and the
/// toolkit certifies it by external reference instead.
Protocol exceptional2_protocol(int k);

/// Full constructive case analysis. Returns a protocol that discriminates
/// the triple perfectly plus the certificate naming the branch taken, or a
/// certificate-only result for the d = 4 residual orbit.
SynthesisResult synthesize(const Triple& t);

}  // namespace gbsd
