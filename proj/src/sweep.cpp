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

#include "gbsd/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <tuple>

#include "gbsd/locc_sim.hpp"

namespace gbsd {

namespace {

const std::vector<Route>& all_routes() {
  static const std::vector<Route> routes = {
      Route::AllMDistinct,   Route::AllNDistinctH0, Route::CaseI_i,
      Route::CaseI_ii,       Route::CaseII_i,       Route::CaseII_ii_1,
      Route::CaseII_iii,     Route::Exceptional1,   Route::Exceptional2,
      Route::FourierToExceptional2, Route::ExternalSingal_d4};
  return routes;
}

struct WorkerAccumulator {
  std::map<std::string, long long> route_counts;
  long long external_certificates = 0;
  long long replay_mismatches = 0;
  std::vector<SweepFailure> failures;
};

SweepDimensionResult sweep_dimension(int d, double tol, int jobs) {
  SweepDimensionResult result;
  result.d = d;
  for (Route r : all_routes()) result.route_counts[to_string(r)] = 0;

  const int labels = d * d;
  std::vector<std::array<int, 3>> combos;
  combos.reserve(static_cast<std::size_t>(labels) * labels * labels / 6);
  for (int a = 0; a < labels; ++a)
    for (int b = a + 1; b < labels; ++b)
      for (int c = b + 1; c < labels; ++c) combos.push_back({a, b, c});
  result.triples = static_cast<long long>(combos.size());

  std::vector<Vector> all_states;
  all_states.reserve(labels);
  for (int id = 0; id < labels; ++id) all_states.push_back(gbs_state(d, id / d, id % d));

  std::atomic<std::size_t> next{0};
  constexpr std::size_t kChunk = 64;

  auto worker = [&](WorkerAccumulator& acc) {
    while (true) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= combos.size()) break;
      const std::size_t end = std::min(begin + kChunk, combos.size());
      for (std::size_t w = begin; w < end; ++w) {
        const auto& c = combos[w];
        const Triple triple(d, GbsIndex(c[0] / d, c[0] % d, d),
                            GbsIndex(c[1] / d, c[1] % d, d),
                            GbsIndex(c[2] / d, c[2] % d, d));
        const SynthesisResult synth = synthesize(triple);
        acc.route_counts[to_string(synth.certificate.route)] += 1;

        if (replay_trace(synth.certificate.trace, triple.indices) !=
            synth.certificate.canonical) {
          acc.replay_mismatches += 1;
          acc.failures.push_back({d, triple.indices, "certificate replay mismatch"});
        }

        if (synth.certificate.route == Route::ExternalSingal_d4) {
          acc.external_certificates += 1;
          if (synth.protocol)
            acc.failures.push_back(
                {d, triple.indices, "external certificate carries a protocol"});
          if (d != 4)
            acc.failures.push_back(
                {d, triple.indices, "external certificate outside d = 4"});
          continue;
        }
        if (!synth.protocol) {
          acc.failures.push_back({d, triple.indices, "no protocol emitted"});
          continue;
        }
        const std::vector<Vector> states = {all_states[c[0]], all_states[c[1]],
                                            all_states[c[2]]};
        const VerificationReport report =
            verify_perfect_discrimination(states, *synth.protocol, tol);
        if (!report.perfect) {
          std::string reason = "verification failed";
          if (!report.failures.empty()) reason += ": " + report.failures.front().reason;
          acc.failures.push_back({d, triple.indices, reason});
        }
      }
    }
  };

  int n_workers = jobs;
  if (n_workers <= 0)
    n_workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  n_workers = std::max(1, std::min<int>(n_workers, 64));

  std::vector<WorkerAccumulator> accs(n_workers);
  {
    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    for (int i = 0; i < n_workers; ++i)
      threads.emplace_back([&, i] { worker(accs[i]); });
    for (auto& t : threads) t.join();
  }
  for (const auto& acc : accs) {
    for (const auto& [route, count] : acc.route_counts)
      result.route_counts[route] += count;
    result.external_certificates += acc.external_certificates;
    result.replay_mismatches += acc.replay_mismatches;
    result.failures.insert(result.failures.end(), acc.failures.begin(),
                           acc.failures.end());
  }
  std::sort(result.failures.begin(), result.failures.end(),
            [](const SweepFailure& a, const SweepFailure& b) {
              return std::tie(a.d, a.triple, a.reason) < std::tie(b.d, b.triple, b.reason);
            });
  return result;
}

}  // namespace

SweepReport run_sweep(const SweepOptions& options) {
  if (options.dmin < 4 || options.dmin > options.dmax)
    throw std::invalid_argument("run_sweep: need 4 <= dmin <= dmax");
  SweepReport report;
  report.dmin = options.dmin;
  report.dmax = options.dmax;
  report.tol = options.tol;
  for (int d = options.dmin; d <= options.dmax; ++d) {
    report.dimensions.push_back(sweep_dimension(d, options.tol, options.jobs));
    report.total_failures += static_cast<long long>(report.dimensions.back().failures.size());
  }
  return report;
}

nlohmann::json report_to_json(const SweepReport& report, bool with_timestamp) {
  nlohmann::json dims = nlohmann::json::array();
  for (const auto& dim : report.dimensions) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : dim.failures) {
      nlohmann::json triple = nlohmann::json::array();
      for (const auto& idx : f.triple)
        triple.push_back(nlohmann::json::array({idx.m.value(), idx.n.value()}));
      failures.push_back({{"triple", std::move(triple)}, {"reason", f.reason}});
    }
    dims.push_back({{"d", dim.d},
                    {"triples", dim.triples},
                    {"routes", dim.route_counts},
                    {"external_certificates", dim.external_certificates},
                    {"replay_mismatches", dim.replay_mismatches},
                    {"verification_failures", std::move(failures)}});
  }
  nlohmann::json out{{"schema_version", 1},
                     {"dmin", report.dmin},
                     {"dmax", report.dmax},
                     {"tol", report.tol},
                     {"dimensions", std::move(dims)},
                     {"total_failures", report.total_failures}};
  if (with_timestamp) {
    const auto now = std::chrono::system_clock::now();
    out["generated_at_unix_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch())
            .count();
  }
  return out;
}

}  // namespace gbsd
