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
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "gbsd/serialization.hpp"

namespace gbsd {

struct SweepOptions {
  int dmin = 4;
  int dmax = 10;
  int jobs = 0;  // 0: hardware concurrency
  double tol = 1e-9;
};

struct SweepFailure {
  int d;
  std::array<GbsIndex, 3> triple;
  std::string reason;
};

struct SweepDimensionResult {
  int d = 0;
  long long triples = 0;
  std::map<std::string, long long> route_counts;
  long long external_certificates = 0;
  long long replay_mismatches = 0;
  std::vector<SweepFailure> failures;
};

struct SweepReport {
  int dmin = 0;
  int dmax = 0;
  double tol = 0.0;
  std::vector<SweepDimensionResult> dimensions;
  long long total_failures = 0;
};

/// Enumerates every 3-subset of the d^2 labels for each d in [dmin, dmax],
/// synthesizes a protocol, verifies it by branch simulation, and replays the
/// certificate trace with exact residue arithmetic. Independent triples are
/// distributed over a worker pool; aggregation is the only synchronization.
SweepReport run_sweep(const SweepOptions& options);

/// Machine-readable report. The timestamp is the only field that differs
/// between two runs with identical flags.
nlohmann::json report_to_json(const SweepReport& report, bool with_timestamp = true);

}  // namespace gbsd
