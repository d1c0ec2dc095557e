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

#include <json.hpp>
#include <optional>
#include <string>

#include "gbsd/synthesizer.hpp"

namespace gbsd {

/// Serialized protocol: versioned JSON with symbolic unitary families
/// (exact integer parameters), measurement projectors as complex vectors
/// encoded [re, im], the decision table, and the synthesis certificate.
/// State label (m, n) means X^m Z^n acting on Alice, the first tensor
/// factor; amplitude index is (Alice index)*d + (Bob index).
struct ProtocolDocument {
  static constexpr int kSchemaVersion = 1;

  int schema_version = kSchemaVersion;
  int dim = 0;
  Protocol protocol;  // steps empty for certificate-only documents
  std::optional<Certificate> certificate;

  friend bool operator==(const ProtocolDocument&, const ProtocolDocument&) = default;
};

ProtocolDocument make_document(int dim, const SynthesisResult& result);

nlohmann::json to_json(const ProtocolDocument& doc);
ProtocolDocument document_from_json(const nlohmann::json& j);

std::string serialize(const ProtocolDocument& doc);
ProtocolDocument parse_document(const std::string& text);

}  // namespace gbsd
