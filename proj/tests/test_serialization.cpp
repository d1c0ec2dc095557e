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

#include <doctest.h>

#include "gbsd/locc_sim.hpp"
#include "gbsd/serialization.hpp"

using namespace gbsd;

namespace {

Triple make_triple(int d, std::array<std::pair<int, int>, 3> labels) {
  return Triple(d, GbsIndex(labels[0].first, labels[0].second, d),
                GbsIndex(labels[1].first, labels[1].second, d),
                GbsIndex(labels[2].first, labels[2].second, d));
}

}  // namespace

TEST_CASE("documents round-trip exactly") {
  const std::vector<Triple> samples = {
      make_triple(5, {{{0, 0}, {1, 0}, {2, 0}}}),   // no reduction
      make_triple(5, {{{0, 0}, {0, 1}, {0, 2}}}),   // one conjugation
      make_triple(6, {{{0, 0}, {3, 0}, {0, 3}}}),   // pair-measurement family
      make_triple(8, {{{0, 0}, {2, 0}, {0, 4}}}),   // re-entry branch
      make_triple(4, {{{0, 0}, {3, 0}, {0, 2}}}),   // certificate-only
  };
  for (const auto& t : samples) {
    const auto result = synthesize(t);
    const ProtocolDocument doc = make_document(t.dim(), result);
    const ProtocolDocument parsed = parse_document(serialize(doc));
    CHECK(parsed == doc);
    // a second round-trip is bit-stable too
    CHECK(serialize(parsed) == serialize(doc));
  }
}

TEST_CASE("parsed documents verify like the originals") {
  const Triple t = make_triple(6, {{{0, 0}, {3, 0}, {0, 3}}});
  const auto result = synthesize(t);
  const ProtocolDocument parsed =
      parse_document(serialize(make_document(t.dim(), result)));
  std::vector<Vector> states;
  for (const auto& idx : t.indices) states.push_back(gbs_state(idx));
  CHECK(verify_perfect_discrimination(states, parsed.protocol).perfect);
}

TEST_CASE("certificate-only documents carry the route and empty steps") {
  const Triple t = make_triple(4, {{{0, 0}, {3, 0}, {0, 2}}});
  const auto result = synthesize(t);
  const ProtocolDocument doc = make_document(4, result);
  CHECK(doc.protocol.steps.empty());
  const auto j = to_json(doc);
  CHECK(j.at("certificate").at("route").get<std::string>() == "ExternalSingal-d4");
  const ProtocolDocument parsed = parse_document(serialize(doc));
  REQUIRE(parsed.certificate.has_value());
  CHECK(parsed.certificate->route == Route::ExternalSingal_d4);
}

TEST_CASE("explicit matrices survive the round trip") {
  ProtocolDocument doc;
  doc.dim = 3;
  doc.protocol.dim = 3;
  Matrix u = build_h(1, 3);
  doc.protocol.steps.push_back(LocalUnitary{Party::Bob, UnitarySpec::explicit_matrix_of(u)});
  const ProtocolDocument parsed = parse_document(serialize(doc));
  CHECK(parsed == doc);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_document("not json at all"), std::invalid_argument);
  CHECK_THROWS_AS(parse_document("{}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_document(R"({"schema_version": 99, "dim": 4,
                                     "steps": [], "decision": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_document(R"({"schema_version": 1, "dim": 1,
                                     "steps": [], "decision": []})"),
                  std::invalid_argument);
  // wrong-size vector inside a measurement
  CHECK_THROWS_AS(parse_document(R"({
    "schema_version": 1, "dim": 2,
    "steps": [{"type": "measurement", "party": "A",
               "projectors": [[[[1.0, 0.0]]]]}],
    "decision": []})"),
                  std::invalid_argument);
  // unknown route string
  CHECK_THROWS_AS(parse_document(R"({
    "schema_version": 1, "dim": 4, "steps": [], "decision": [],
    "certificate": {"route": "NoSuchRoute", "trace": [],
                    "canonical": [[0,0],[1,0],[0,1]]}})"),
                  std::invalid_argument);
}
