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

#include "gbsd/synthesizer.hpp"

#include <cmath>
#include <map>
#include <set>

namespace gbsd {

namespace {

Vector basis_vector(int i, int d) {
  Vector v = Vector::Zero(d);
  v(i) = 1.0;
  return v;
}

Vector pair_vector(int even_index, int sign, int d) {
  Vector v = Vector::Zero(d);
  const double inv = 1.0 / std::sqrt(2.0);
  v(even_index) = inv;
  v((even_index + 1) % d) = sign * inv;
  return v;
}

Measurement computational_measurement(Party party, int d) {
  Measurement meas{party, {}};
  meas.projectors.reserve(d);
  for (int i = 0; i < d; ++i) meas.projectors.push_back({basis_vector(i, d)});
  return meas;
}

// Rank-one measurement on the d/2 two-level pairs: outcome 2j + 0 for
// (|2j> + |2j+1>)/sqrt(2), outcome 2j + 1 for the minus sign.
Measurement pair_measurement(Party party, int d) {
  Measurement meas{party, {}};
  meas.projectors.reserve(d);
  for (int j = 0; 2 * j < d; ++j) {
    meas.projectors.push_back({pair_vector(2 * j, +1, d)});
    meas.projectors.push_back({pair_vector(2 * j, -1, d)});
  }
  return meas;
}

// Emits the local unitary pair realizing one reduction move. Left X powers
// act on Alice directly; Z powers and the H conjugations ricochet their Bob
// half across |psi0| as a transpose.
void append_unitary_steps(Protocol& p, const ReductionStep& step) {
  switch (step.kind) {
    case ReductionStep::Kind::LeftMulX:
      p.steps.push_back(LocalUnitary{Party::Alice, UnitarySpec::x_pow(step.param.value())});
      break;
    case ReductionStep::Kind::LeftMulZ:
      p.steps.push_back(
          LocalUnitary{Party::Bob, UnitarySpec::z_pow_transpose(step.param.value())});
      break;
    case ReductionStep::Kind::ConjH:
      p.steps.push_back(LocalUnitary{Party::Alice, UnitarySpec::h_alpha(step.param.value())});
      p.steps.push_back(LocalUnitary{
          Party::Bob, UnitarySpec::h_alpha_adjoint_transpose(step.param.value())});
      break;
  }
}

// Alice then Bob measure the computational basis; outcome (j, b) belongs to
// the unique hypothesis whose label satisfies b = j - m_i mod d.
void append_measure_announce_stage(Protocol& p, const std::vector<GbsIndex>& labels) {
  const int d = p.dim;
  const int step_a = static_cast<int>(p.steps.size());
  const int step_b = step_a + 1;
  p.steps.push_back(computational_measurement(Party::Alice, d));
  p.steps.push_back(computational_measurement(Party::Bob, d));
  for (int j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const int b = ((j - labels[i].m.value()) % d + d) % d;
      p.set_decision({{step_a, j}, {step_b, b}}, static_cast<int>(i));
    }
  }
  p.sort_decision();
}

// Shared stage of the two exceptional families {I, X^s, Z^{d/2}}: Alice and
// Bob both measure the pair basis. Given Alice outcome on pair a = 2j with
// sign sg, the Bob residuals are |a> + sg|a+1| for the identity hypothesis,
// its sign flip for the clock hypothesis, and |a-s> + sg|a-s+1> for the
// shift hypothesis; the latter overlaps one pair outcome when a-s is even
// and four when a-s is odd. role_to_hyp maps (identity, shift, clock) roles
// to hypothesis indices.
void append_exceptional_stage(Protocol& p, int s, const std::array<int, 3>& role_to_hyp) {
  const int d = p.dim;
  const int step_a = static_cast<int>(p.steps.size());
  const int step_b = step_a + 1;
  p.steps.push_back(pair_measurement(Party::Alice, d));
  p.steps.push_back(pair_measurement(Party::Bob, d));

  std::map<OutcomeRecord, int> table;
  for (int j = 0; 2 * j < d; ++j) {
    for (int sg = 0; sg < 2; ++sg) {  // 0: plus, 1: minus
      const int out_a = 2 * j + sg;
      const int a = 2 * j;
      table.emplace(OutcomeRecord{{step_a, out_a}, {step_b, 2 * j + sg}}, role_to_hyp[0]);
      table.emplace(OutcomeRecord{{step_a, out_a}, {step_b, 2 * j + (1 - sg)}},
                    role_to_hyp[2]);
      const int b0 = ((a - s) % d + d) % d;
      if (b0 % 2 == 0) {
        table.emplace(OutcomeRecord{{step_a, out_a}, {step_b, b0 + sg}}, role_to_hyp[1]);
      } else {
        const int p1 = b0 - 1;
        const int p2 = (b0 + 1) % d;
        for (int t : {p1, p1 + 1, p2, p2 + 1})
          table.emplace(OutcomeRecord{{step_a, out_a}, {step_b, t}}, role_to_hyp[1]);
      }
    }
  }
  for (auto& [record, hyp] : table) p.set_decision(record, hyp);
  p.sort_decision();
}

bool all_m_distinct(const std::array<GbsIndex, 3>& idx) {
  return idx[0].m != idx[1].m && idx[0].m != idx[2].m && idx[1].m != idx[2].m;
}

bool all_n_distinct(const std::array<GbsIndex, 3>& idx) {
  return idx[0].n != idx[1].n && idx[0].n != idx[2].n && idx[1].n != idx[2].n;
}

std::vector<GbsIndex> to_vector(const std::array<GbsIndex, 3>& idx) {
  return {idx.begin(), idx.end()};
}

// Role positions within a canonical label set {(0,0), (m,0), (0,n)}.
struct CanonicalRoles {
  int identity;
  int shift;
  int clock;
  int m;
  int n;
};

CanonicalRoles find_roles(const std::array<GbsIndex, 3>& labels) {
  CanonicalRoles roles{-1, -1, -1, 0, 0};
  for (int i = 0; i < 3; ++i) {
    if (labels[i].m.is_zero() && labels[i].n.is_zero())
      roles.identity = i;
    else if (labels[i].n.is_zero())
      roles.shift = i;
    else if (labels[i].m.is_zero())
      roles.clock = i;
  }
  if (roles.identity < 0 || roles.shift < 0 || roles.clock < 0)
    throw std::logic_error("labels are not in canonical {I, X^m, Z^n} form");
  roles.m = labels[roles.shift].m.value();
  roles.n = labels[roles.clock].n.value();
  return roles;
}

}  // namespace

Triple::Triple(int d, GbsIndex a, GbsIndex b, GbsIndex c) : indices{a, b, c} {
  if (d < 2) throw std::invalid_argument("Triple: d must be >= 2");
  for (const auto& idx : indices)
    if (idx.dim() != d) throw std::invalid_argument("Triple: index dim mismatch");
  if (a == b || a == c || b == c)
    throw std::invalid_argument("Triple: indices must be pairwise distinct");
}

GbsIndex ReductionStep::apply(const GbsIndex& idx) const {
  switch (kind) {
    case Kind::LeftMulX:
      return left_mul_x(param, idx);
    case Kind::LeftMulZ:
      return left_mul_z(param, idx);
    case Kind::ConjH:
      return conjugate_by_h(param, idx);
  }
  throw std::logic_error("unreachable");
}

std::string to_string(Route route) {
  switch (route) {
    case Route::AllMDistinct: return "AllMDistinct";
    case Route::AllNDistinctH0: return "AllNDistinctH0";
    case Route::CaseI_i: return "CaseI-i";
    case Route::CaseI_ii: return "CaseI-ii";
    case Route::CaseII_i: return "CaseII-i";
    case Route::CaseII_ii_1: return "CaseII-ii-1";
    case Route::CaseII_iii: return "CaseII-iii";
    case Route::Exceptional1: return "Exceptional1";
    case Route::Exceptional2: return "Exceptional2";
    case Route::FourierToExceptional2: return "FourierToExceptional2";
    case Route::ExternalSingal_d4: return "ExternalSingal-d4";
  }
  throw std::logic_error("unreachable");
}

Route route_from_string(const std::string& name) {
  for (Route r : {Route::AllMDistinct, Route::AllNDistinctH0, Route::CaseI_i,
                  Route::CaseI_ii, Route::CaseII_i, Route::CaseII_ii_1, Route::CaseII_iii,
                  Route::Exceptional1, Route::Exceptional2, Route::FourierToExceptional2,
                  Route::ExternalSingal_d4}) {
    if (to_string(r) == name) return r;
  }
  throw std::invalid_argument("unknown route: " + name);
}

std::array<GbsIndex, 3> replay_trace(const std::vector<ReductionStep>& trace,
                                     std::array<GbsIndex, 3> indices) {
  for (const auto& step : trace)
    for (auto& idx : indices) idx = step.apply(idx);
  return indices;
}

std::array<GbsIndex, 3> order_for_reduction(const Triple& t) {
  const auto& idx = t.indices;
  if (all_m_distinct(idx))
    throw NotApplicableError("order_for_reduction: all m distinct");
  if (all_n_distinct(idx))
    throw NotApplicableError("order_for_reduction: all n distinct");
  // Exactly one pair shares an m-value (a triple sharing one m throughout
  // would have all n distinct), and the third state shares its n-value with
  // exactly one member of that pair.
  int pa = -1, pb = -1, third = -1;
  for (int i = 0; i < 3 && pa < 0; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (idx[i].m == idx[j].m) {
        pa = i;
        pb = j;
        third = 3 - i - j;
        break;
      }
  const int middle = (idx[pa].n == idx[third].n) ? pa : pb;
  const int first = (middle == pa) ? pb : pa;
  return {idx[first], idx[middle], idx[third]};
}

CanonicalReduction reduce_to_canonical(const Triple& t) {
  const int d = t.dim();
  CanonicalReduction red;
  red.ordered = order_for_reduction(t);
  const Residue m1 = red.ordered[0].m;
  const Residue n2 = red.ordered[1].n;
  if (!m1.is_zero()) red.trace.push_back({ReductionStep::Kind::LeftMulX, -m1});
  if (!n2.is_zero()) red.trace.push_back({ReductionStep::Kind::LeftMulZ, -n2});
  red.m = red.ordered[2].m - m1;
  red.n = red.ordered[0].n - n2;
  if (red.m.is_zero() || red.n.is_zero())
    throw std::logic_error("reduce_to_canonical: degenerate canonical form");
  (void)d;
  return red;
}

Protocol distinct_shift_protocol(int d, const std::vector<GbsIndex>& states) {
  if (d < 2) throw std::invalid_argument("distinct_shift_protocol: d must be >= 2");
  if (states.size() < 2 || states.size() > static_cast<std::size_t>(d))
    throw std::invalid_argument("distinct_shift_protocol: need 2 <= N <= d states");
  std::set<Residue> ms;
  for (const auto& idx : states) {
    if (idx.dim() != d) throw std::invalid_argument("distinct_shift_protocol: dim mismatch");
    if (!ms.insert(idx.m).second)
      throw std::invalid_argument("distinct_shift_protocol: m values must be pairwise distinct");
  }
  Protocol p;
  p.dim = d;
  append_measure_announce_stage(p, states);
  return p;
}

Protocol exceptional1_protocol(int n) {
  if (n < 2) throw std::invalid_argument("exceptional1_protocol: n must be >= 2");
  Protocol p;
  p.dim = 2 * n;
  append_exceptional_stage(p, n, {0, 1, 2});
  return p;
}

Protocol exceptional2_protocol(int k) {
  if (k < 1) throw std::invalid_argument("exceptional2_protocol: k must be >= 1");
  if (k == 1)
    throw std::invalid_argument(
        "exceptional2_protocol: k = 1 is refused; that orbit is certified by "
        "external reference");
  Protocol p;
  p.dim = 4 * k;
  append_exceptional_stage(p, 3 * k, {0, 1, 2});
  return p;
}

SynthesisResult synthesize(const Triple& t) {
  const int d = t.dim();
  if (d < 4)
    throw UnsupportedDimensionError("synthesize: d must be >= 4");

  SynthesisResult result;
  auto& cert = result.certificate;

  if (all_m_distinct(t.indices)) {
    cert.route = Route::AllMDistinct;
    cert.canonical = t.indices;
    Protocol p;
    p.dim = d;
    append_measure_announce_stage(p, to_vector(t.indices));
    result.protocol = std::move(p);
    return result;
  }

  Protocol p;
  p.dim = d;
  auto conjugate = [&](int alpha, std::array<GbsIndex, 3>& labels,
                       std::vector<ReductionStep>& trace) {
    ReductionStep step{ReductionStep::Kind::ConjH, Residue(alpha, d)};
    append_unitary_steps(p, step);
    for (auto& idx : labels) idx = step.apply(idx);
    trace.push_back(step);
  };

  if (all_n_distinct(t.indices)) {
    auto labels = t.indices;
    conjugate(0, labels, cert.trace);
    cert.route = Route::AllNDistinctH0;
    cert.canonical = labels;
    append_measure_announce_stage(p, to_vector(labels));
    result.protocol = std::move(p);
    return result;
  }

  CanonicalReduction red = reduce_to_canonical(t);
  cert.trace = red.trace;
  for (const auto& step : red.trace) append_unitary_steps(p, step);
  auto labels = replay_trace(red.trace, t.indices);

  // Case analysis on the canonical form {I, X^m, Z^n}, 0 < m, n < d. The
  // even case can re-enter once: the congruence 2m = n (mod d) with d = 2n
  // admits 2m = n as well as 2m = 3n over the integers, and only the latter
  // is the shift/clock family solved by the exceptional measurements. The
  // former is rotated by H_0 and routed back through the tree.
  bool gap_fix_used = false;
  while (true) {
    const CanonicalRoles roles = find_roles(labels);
    const int m = roles.m;
    const int n = roles.n;
    const std::array<int, 3> role_to_hyp{roles.identity, roles.shift, roles.clock};

    if (d % 2 == 1) {
      const int alpha = (m != n) ? 1 : 2;
      cert.route = (m != n) ? Route::CaseI_i : Route::CaseI_ii;
      conjugate(alpha, labels, cert.trace);
      break;
    }
    if ((2 * m) % d != 0 && (2 * m) % d != n) {
      cert.route = Route::CaseII_i;
      conjugate(2, labels, cert.trace);
      break;
    }
    if ((2 * m) % d == 0) {  // d = 2m
      if ((2 * n) % d != 0 && (2 * n) % d != m) {
        cert.route = Route::CaseII_ii_1;
        conjugate(2, labels, cert.trace);
        conjugate(2, labels, cert.trace);
        break;
      }
      if ((2 * n) % d == 0) {  // m = n = d/2: the {I, X^n, Z^n} family
        cert.route = Route::Exceptional1;
        cert.canonical = labels;
        append_exceptional_stage(p, n, role_to_hyp);
        result.protocol = std::move(p);
        return result;
      }
      // 2n = m (mod d) with m = d/2 even; n is d/4 or 3d/4.
      const int k = d / 4;
      if (n == 3 * k) {
        if (k == 1) {
          cert.route = Route::ExternalSingal_d4;
          cert.canonical = labels;
          return result;  // certificate only, no protocol
        }
        cert.route = gap_fix_used ? Route::FourierToExceptional2 : Route::Exceptional2;
        conjugate(0, labels, cert.trace);  // {I, X^{2k}, Z^{3k}} -> {I, X^{3k}, Z^{2k}}
        const CanonicalRoles final_roles = find_roles(labels);
        cert.canonical = labels;
        append_exceptional_stage(p, 3 * k,
                                 {final_roles.identity, final_roles.shift,
                                  final_roles.clock});
        result.protocol = std::move(p);
        return result;
      }
      gap_fix_used = true;
      conjugate(0, labels, cert.trace);
      continue;
    }
    // 2m = n (mod d), 2m != 0 (mod d)
    if ((4LL * m) % d != 0) {
      cert.route = Route::CaseII_iii;
      conjugate(4 % d, labels, cert.trace);
      break;
    }
    // 4m = 0 (mod d) forces d = 2n; over the integers 2m is n or 3n.
    if (2 * m == 3 * n) {  // {I, X^{3k}, Z^{2k}} with k = n/2, already in family form
      const int k = n / 2;
      if (k == 1) {
        cert.route = Route::ExternalSingal_d4;
        cert.canonical = labels;
        return result;
      }
      cert.route = gap_fix_used ? Route::FourierToExceptional2 : Route::Exceptional2;
      cert.canonical = labels;
      append_exceptional_stage(p, 3 * k, role_to_hyp);
      result.protocol = std::move(p);
      return result;
    }
    gap_fix_used = true;
    conjugate(0, labels, cert.trace);
  }

  cert.canonical = labels;
  append_measure_announce_stage(p, to_vector(labels));
  result.protocol = std::move(p);
  return result;
}

}  // namespace gbsd
