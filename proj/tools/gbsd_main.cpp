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

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "gbsd/locc_sim.hpp"
#include "gbsd/sweep.hpp"

namespace {

// Exit codes: 0 success/perfect, 1 verification failure,
// 2 usage/validation error, 3 external-certificate-only.
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExternalCertificate = 3;

gbsd::GbsIndex parse_index(const std::string& text, int d) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("state label must look like m,n: " + text);
  int m = 0, n = 0;
  try {
    std::size_t pos = 0;
    m = std::stoi(text.substr(0, comma), &pos);
    if (pos != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    n = std::stoi(rest, &pos);
    if (pos != rest.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("state label must look like m,n: " + text);
  }
  if (m < 0 || m >= d || n < 0 || n >= d)
    throw std::invalid_argument("state label out of range for d = " + std::to_string(d) +
                                ": " + text);
  return gbsd::GbsIndex(m, n, d);
}

gbsd::Triple parse_triple(int d, const std::vector<std::string>& labels) {
  if (labels.size() != 3) throw std::invalid_argument("exactly three m,n labels expected");
  return gbsd::Triple(d, parse_index(labels[0], d), parse_index(labels[1], d),
                      parse_index(labels[2], d));
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

int default_jobs() {
  if (const char* env = std::getenv("GBSD_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // auto
}

int cmd_synthesize(int d, const std::vector<std::string>& labels,
                   const std::string& output) {
  const gbsd::Triple triple = parse_triple(d, labels);
  const gbsd::SynthesisResult result = gbsd::synthesize(triple);
  const gbsd::ProtocolDocument doc = gbsd::make_document(d, result);
  write_output(output, gbsd::serialize(doc));
  if (result.certificate.route == gbsd::Route::ExternalSingal_d4) {
    std::cerr << "certificate-only: the d=4 residual orbit is certified by external "
                 "reference; no protocol emitted\n";
    return kExitExternalCertificate;
  }
  return kExitOk;
}

int cmd_verify(const std::string& path, int d, const std::vector<std::string>& labels,
               double tol, bool as_json) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open protocol document: " << path << "\n";
    return kExitUsage;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  gbsd::ProtocolDocument doc;
  try {
    doc = gbsd::parse_document(buffer.str());
  } catch (const std::exception& e) {
    std::cerr << "malformed document: " << e.what() << "\n";
    return kExitUsage;
  }
  if (doc.dim != d) {
    std::cerr << "document dimension " << doc.dim << " does not match --d " << d << "\n";
    return kExitUsage;
  }
  const gbsd::Triple triple = parse_triple(d, labels);
  if (doc.protocol.steps.empty()) {
    std::cerr << "document has no executable protocol (certificate-only)\n";
    return kExitVerificationFailed;
  }
  std::vector<gbsd::Vector> states;
  for (const auto& idx : triple.indices) states.push_back(gbsd::gbs_state(idx));
  const gbsd::VerificationReport report =
      gbsd::verify_perfect_discrimination(states, doc.protocol, tol);

  if (as_json) {
    nlohmann::json branches = nlohmann::json::array();
    for (const auto& leaf : report.branches) {
      nlohmann::json record = nlohmann::json::array();
      for (const auto& [step, outcome] : leaf.record)
        record.push_back(nlohmann::json::array({step, outcome}));
      branches.push_back({{"record", std::move(record)}, {"probs", leaf.probs}});
    }
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures) {
      nlohmann::json record = nlohmann::json::array();
      for (const auto& [step, outcome] : f.record)
        record.push_back(nlohmann::json::array({step, outcome}));
      failures.push_back({{"record", std::move(record)}, {"reason", f.reason}});
    }
    nlohmann::json out{{"perfect", report.perfect},
                       {"totals", report.totals},
                       {"branches", std::move(branches)},
                       {"failures", std::move(failures)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (report.perfect ? "perfect discrimination: yes"
                                 : "perfect discrimination: NO")
              << "\n";
    std::cout << "reachable records: " << report.branches.size() << "\n";
    std::cout << "per-hypothesis totals:";
    for (double t : report.totals) std::cout << " " << std::setprecision(12) << t;
    std::cout << "\n";
    for (const auto& f : report.failures) {
      std::cout << "failure: " << f.reason << " at record [";
      for (std::size_t i = 0; i < f.record.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << "(" << f.record[i].first << "," << f.record[i].second << ")";
      }
      std::cout << "]\n";
    }
  }
  return report.perfect ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(int dmin, int dmax, int jobs, int cap, const std::string& report_path,
              double tol) {
  if (dmax > cap) {
    std::cerr << "dmax " << dmax << " exceeds the configured cap " << cap << "\n";
    return kExitUsage;
  }
  gbsd::SweepOptions options;
  options.dmin = dmin;
  options.dmax = dmax;
  options.jobs = jobs;
  options.tol = tol;
  const gbsd::SweepReport report = gbsd::run_sweep(options);
  const std::string text = gbsd::report_to_json(report).dump(2) + "\n";
  if (!report_path.empty()) write_output(report_path, text);

  for (const auto& dim : report.dimensions) {
    std::cout << "d=" << dim.d << ": " << dim.triples << " triples, "
              << dim.external_certificates << " external certificates, "
              << dim.failures.size() << " failures\n";
  }
  std::cout << "total failures: " << report.total_failures << "\n";
  return report.total_failures == 0 ? kExitOk : kExitVerificationFailed;
}

void print_matrix(const gbsd::Matrix& m) {
  std::cout << std::fixed << std::setprecision(6);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto v = m(r, c);
      std::cout << (c ? "  " : "") << std::showpos << v.real() << std::noshowpos << ""
                << std::showpos << v.imag() << std::noshowpos << "i";
    }
    std::cout << "\n";
  }
}

int cmd_inspect(const std::string& matrix_spec, int gram_d, int lemma1_d) {
  if (!matrix_spec.empty()) {
    std::stringstream ss(matrix_spec);
    std::string kind;
    std::getline(ss, kind, ':');
    if (kind == "X" || kind == "Z") {
      std::string d_str;
      std::getline(ss, d_str);
      const int d = std::stoi(d_str);
      print_matrix(kind == "X" ? gbsd::build_x(d) : gbsd::build_z(d));
      return kExitOk;
    }
    if (kind == "H") {
      std::string alpha_str, d_str;
      std::getline(ss, alpha_str, ':');
      std::getline(ss, d_str);
      const int alpha = std::stoi(alpha_str);
      const int d = std::stoi(d_str);
      print_matrix(gbsd::build_h(alpha, d));
      return kExitOk;
    }
    throw std::invalid_argument("matrix spec must be X:d, Z:d or H:alpha:d");
  }
  if (gram_d > 0) {
    const int d = gram_d;
    gbsd::Matrix gram(d * d, d * d);
    std::vector<gbsd::Vector> states;
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) states.push_back(gbsd::gbs_state(d, m, n));
    for (int i = 0; i < d * d; ++i)
      for (int j = 0; j < d * d; ++j) gram(i, j) = states[i].dot(states[j]);
    const double dev =
        (gram - gbsd::Matrix::Identity(d * d, d * d)).cwiseAbs().maxCoeff();
    std::cout << "gram deviation from identity: " << std::scientific
              << std::setprecision(3) << dev << "\n";
    return kExitOk;
  }
  if (lemma1_d > 0) {
    const int d = lemma1_d;
    double worst = 0.0;
    for (int alpha = 0; alpha < d; ++alpha) {
      if (!gbsd::h_alpha_valid(alpha, d)) continue;
      const gbsd::Matrix h = gbsd::build_h(alpha, d);
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          const gbsd::Matrix lhs =
              h *
              gbsd::weyl_matrix({gbsd::Residue(m, d), gbsd::Residue(n, d),
                                 gbsd::Residue(0, d)}) *
              h.adjoint();
          const gbsd::Matrix rhs = gbsd::weyl_matrix(
              {gbsd::Residue(alpha * m + n, d), gbsd::Residue(-m, d), gbsd::Residue(0, d)});
          worst = std::max(worst, gbsd::phase_aligned_deviation(lhs, rhs));
        }
    }
    std::cout << "max phase-aligned conjugation deviation: " << std::scientific
              << std::setprecision(3) << worst << "\n";
    return kExitOk;
  }
  throw std::invalid_argument("inspect needs --matrix, --gram or --lemma1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesis and exhaustive verification of LOCC discrimination "
               "protocols for triples of generalized Bell states"};
  app.require_subcommand(1);

  // synthesize
  auto* synth = app.add_subcommand(
      "synthesize", "Synthesize a discrimination protocol for three states");
  int synth_d = 0;
  std::vector<std::string> synth_labels;
  std::string synth_output;
  synth->add_option("--d", synth_d, "Dimension d (>= 4)")->required();
  synth->add_option("states", synth_labels, "Three state labels m,n")->expected(3);
  synth->add_option("-o,--output", synth_output,
                    "Output path for the protocol document (default: stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Verify a protocol document");
  std::string verify_path;
  int verify_d = 0;
  std::vector<std::string> verify_labels;
  double verify_tol = 1e-9;
  bool verify_json = false;
  verify->add_option("--protocol", verify_path, "Protocol document path")->required();
  verify->add_option("--d", verify_d, "Dimension d")->required();
  verify->add_option("states", verify_labels, "Three state labels m,n")->expected(3);
  verify->add_option("--tol", verify_tol, "Branch-pruning tolerance");
  verify->add_flag("--json", verify_json, "Emit the report as JSON");

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "Synthesize and verify every 3-subset for a range of dimensions");
  int sweep_dmin = 4, sweep_dmax = 4, sweep_jobs = default_jobs(), sweep_cap = 10;
  double sweep_tol = 1e-9;
  std::string sweep_report;
  sweep->add_option("--dmin", sweep_dmin, "Smallest dimension (>= 4)");
  sweep->add_option("--dmax", sweep_dmax, "Largest dimension");
  sweep->add_option("--jobs", sweep_jobs, "Worker count (default: GBSD_JOBS or all cores)");
  sweep->add_option("--cap", sweep_cap, "Safety cap on dmax");
  sweep->add_option("--report", sweep_report, "Write the JSON report to this path");
  sweep->add_option("--tol", sweep_tol, "Branch-pruning tolerance");

  // inspect
  auto* inspect = app.add_subcommand("inspect", "Print matrices and diagnostics");
  std::string inspect_matrix;
  int inspect_gram = 0, inspect_lemma1 = 0;
  inspect->add_option("--matrix", inspect_matrix, "X:d, Z:d or H:alpha:d");
  inspect->add_option("--gram", inspect_gram, "Gram deviation of the d^2 states");
  inspect->add_option("--lemma1", inspect_lemma1,
                      "Worst conjugation deviation over valid alpha, m, n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (synth->parsed()) return cmd_synthesize(synth_d, synth_labels, synth_output);
    if (verify->parsed())
      return cmd_verify(verify_path, verify_d, verify_labels, verify_tol, verify_json);
    if (sweep->parsed())
      return cmd_sweep(sweep_dmin, sweep_dmax, sweep_jobs, sweep_cap, sweep_report,
                       sweep_tol);
    if (inspect->parsed()) return cmd_inspect(inspect_matrix, inspect_gram, inspect_lemma1);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
