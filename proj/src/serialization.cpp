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

#include "gbsd/serialization.hpp"

namespace gbsd {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex entry must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Vector vector_from_json(const json& j, int d) {
  if (!j.is_array() || static_cast<int>(j.size()) != d)
    throw std::invalid_argument("vector has wrong dimension");
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = complex_from_json(j[i]);
  return v;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, int d) {
  if (!j.is_array() || static_cast<int>(j.size()) != d)
    throw std::invalid_argument("matrix has wrong row count");
  Matrix m(d, d);
  for (int r = 0; r < d; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw std::invalid_argument("matrix has wrong column count");
    for (int c = 0; c < d; ++c) m(r, c) = complex_from_json(row[c]);
  }
  return m;
}

std::string party_name(Party p) { return to_string(p); }

Party party_from_json(const json& j) {
  const auto name = j.get<std::string>();
  if (name == "A") return Party::Alice;
  if (name == "B") return Party::Bob;
  throw std::invalid_argument("party must be \"A\" or \"B\"");
}

json step_to_json(const ProtocolStep& step) {
  if (const auto* u = std::get_if<LocalUnitary>(&step)) {
    json out{{"type", "unitary"}, {"party", party_name(u->party)}};
    switch (u->spec.family) {
      case UnitarySpec::Family::XPow: out["family"] = "X"; break;
      case UnitarySpec::Family::ZPow: out["family"] = "Z"; break;
      case UnitarySpec::Family::HAlpha: out["family"] = "H"; break;
      case UnitarySpec::Family::Explicit: out["family"] = "explicit"; break;
    }
    if (u->spec.family == UnitarySpec::Family::Explicit) {
      out["matrix"] = matrix_to_json(u->spec.explicit_matrix);
    } else {
      out["param"] = u->spec.param;
    }
    out["adjoint"] = u->spec.adjoint;
    out["transpose"] = u->spec.transpose;
    return out;
  }
  const auto& meas = std::get<Measurement>(step);
  json projectors = json::array();
  for (const auto& vectors : meas.projectors) {
    json vlist = json::array();
    for (const auto& v : vectors) vlist.push_back(vector_to_json(v));
    projectors.push_back(std::move(vlist));
  }
  return json{{"type", "measurement"},
              {"party", party_name(meas.party)},
              {"projectors", std::move(projectors)}};
}

ProtocolStep step_from_json(const json& j, int d) {
  const auto type = j.at("type").get<std::string>();
  const Party party = party_from_json(j.at("party"));
  if (type == "unitary") {
    UnitarySpec spec;
    const auto family = j.at("family").get<std::string>();
    if (family == "X")
      spec.family = UnitarySpec::Family::XPow;
    else if (family == "Z")
      spec.family = UnitarySpec::Family::ZPow;
    else if (family == "H")
      spec.family = UnitarySpec::Family::HAlpha;
    else if (family == "explicit")
      spec.family = UnitarySpec::Family::Explicit;
    else
      throw std::invalid_argument("unknown unitary family: " + family);
    if (spec.family == UnitarySpec::Family::Explicit)
      spec.explicit_matrix = matrix_from_json(j.at("matrix"), d);
    else
      spec.param = j.at("param").get<int>();
    spec.adjoint = j.value("adjoint", false);
    spec.transpose = j.value("transpose", false);
    return LocalUnitary{party, std::move(spec)};
  }
  if (type == "measurement") {
    Measurement meas{party, {}};
    for (const json& vlist : j.at("projectors")) {
      std::vector<Vector> vectors;
      for (const json& v : vlist) vectors.push_back(vector_from_json(v, d));
      meas.projectors.push_back(std::move(vectors));
    }
    return meas;
  }
  throw std::invalid_argument("unknown step type: " + type);
}

std::string kind_name(ReductionStep::Kind kind) {
  switch (kind) {
    case ReductionStep::Kind::LeftMulX: return "leftmul_x";
    case ReductionStep::Kind::LeftMulZ: return "leftmul_z";
    case ReductionStep::Kind::ConjH: return "conj_h";
  }
  throw std::logic_error("unreachable");
}

ReductionStep::Kind kind_from_name(const std::string& name) {
  if (name == "leftmul_x") return ReductionStep::Kind::LeftMulX;
  if (name == "leftmul_z") return ReductionStep::Kind::LeftMulZ;
  if (name == "conj_h") return ReductionStep::Kind::ConjH;
  throw std::invalid_argument("unknown reduction step kind: " + name);
}

json certificate_to_json(const Certificate& cert) {
  json trace = json::array();
  for (const auto& step : cert.trace)
    trace.push_back(json{{"kind", kind_name(step.kind)}, {"param", step.param.value()}});
  json canonical = json::array();
  for (const auto& idx : cert.canonical)
    canonical.push_back(json::array({idx.m.value(), idx.n.value()}));
  return json{{"route", to_string(cert.route)},
              {"trace", std::move(trace)},
              {"canonical", std::move(canonical)}};
}

Certificate certificate_from_json(const json& j, int d) {
  Certificate cert;
  cert.route = route_from_string(j.at("route").get<std::string>());
  for (const json& step : j.at("trace"))
    cert.trace.push_back({kind_from_name(step.at("kind").get<std::string>()),
                          Residue(step.at("param").get<int>(), d)});
  const json& canonical = j.at("canonical");
  if (!canonical.is_array() || canonical.size() != 3)
    throw std::invalid_argument("certificate canonical form must list 3 labels");
  for (int i = 0; i < 3; ++i)
    cert.canonical[i] =
        GbsIndex(canonical[i].at(0).get<int>(), canonical[i].at(1).get<int>(), d);
  return cert;
}

}  // namespace

ProtocolDocument make_document(int dim, const SynthesisResult& result) {
  ProtocolDocument doc;
  doc.dim = dim;
  if (result.protocol) doc.protocol = *result.protocol;
  doc.protocol.dim = dim;
  doc.certificate = result.certificate;
  return doc;
}

nlohmann::json to_json(const ProtocolDocument& doc) {
  json steps = json::array();
  for (const auto& step : doc.protocol.steps) steps.push_back(step_to_json(step));
  json decision = json::array();
  for (const auto& [record, hyp] : doc.protocol.decision) {
    json rec = json::array();
    for (const auto& [step, outcome] : record) rec.push_back(json::array({step, outcome}));
    decision.push_back(json{{"record", std::move(rec)}, {"hypothesis", hyp}});
  }
  json out{{"schema_version", doc.schema_version},
           {"dim", doc.dim},
           {"steps", std::move(steps)},
           {"decision", std::move(decision)}};
  if (doc.certificate) out["certificate"] = certificate_to_json(*doc.certificate);
  return out;
}

ProtocolDocument document_from_json(const nlohmann::json& j) {
  ProtocolDocument doc;
  doc.schema_version = j.at("schema_version").get<int>();
  if (doc.schema_version != ProtocolDocument::kSchemaVersion)
    throw std::invalid_argument("unsupported schema version " +
                                std::to_string(doc.schema_version));
  doc.dim = j.at("dim").get<int>();
  if (doc.dim < 2) throw std::invalid_argument("dim must be >= 2");
  doc.protocol.dim = doc.dim;
  for (const json& step : j.at("steps"))
    doc.protocol.steps.push_back(step_from_json(step, doc.dim));
  for (const json& entry : j.at("decision")) {
    OutcomeRecord record;
    for (const json& pair : entry.at("record")) {
      if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument("record entry must be a [step, outcome] pair");
      record.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    doc.protocol.set_decision(std::move(record), entry.at("hypothesis").get<int>());
  }
  doc.protocol.sort_decision();
  if (j.contains("certificate"))
    doc.certificate = certificate_from_json(j.at("certificate"), doc.dim);
  return doc;
}

std::string serialize(const ProtocolDocument& doc) { return to_json(doc).dump(2) + "\n"; }

ProtocolDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  try {
    return document_from_json(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed document: ") + e.what());
  }
}

}  // namespace gbsd
