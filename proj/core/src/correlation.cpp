// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The eczcs Authors
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

#include "eczcs/correlation.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>

#include "eczcs/error.hpp"

namespace eczcs {

namespace {

void require_compatible(const PhaseSequence& a, const PhaseSequence& b) {
  if (a.length() != b.length() || a.q() != b.q()) {
    throw ShapeError("correlation needs equal length and alphabet");
  }
}

void require_shift(int u, std::size_t length) {
  const int l = static_cast<int>(length);
  if (u <= -l || u >= l) {
    throw ShapeError("shift " + std::to_string(u) + " outside (-" + std::to_string(l) +
                     ", " + std::to_string(l) + ")");
  }
}

void require_compatible(const SequenceSet& a, const SequenceSet& b) {
  if (a.size() != b.size() || a.length() != b.length() || a.q() != b.q()) {
    throw ShapeError("set correlation needs equal (N, L, q)");
  }
}

// Adds sum_k xi_q^(a[k] - b[k]) for k < n. Binary and quaternary
// alphabets reduce to integer sums, which the compiler vectorizes.
void accumulate_products(CycloInt& acc, const int* a, const int* b, int n) {
  const int q = acc.q();
  if (q == 2) {
    std::int64_t minus = 0;
    for (int k = 0; k < n; ++k) minus += a[k] ^ b[k];
    acc.add_root(0, n - minus);
    acc.add_root(1, minus);
    return;
  }
  if (q == 4) {
    std::int64_t re = 0;
    std::int64_t im = 0;
    for (int k = 0; k < n; ++k) {
      const int d = (a[k] - b[k]) & 3;
      re += (d == 0) - (d == 2);
      im += (d == 1) - (d == 3);
    }
    acc.add_root(0, re);
    acc.add_root(1, im);
    return;
  }
  for (int k = 0; k < n; ++k) acc.add_difference(a[k], b[k]);
}

// Adds accf(s0, s1, u) into acc without re-validating.
void accumulate_accf(CycloInt& acc, const PhaseSequence& s0, const PhaseSequence& s1,
                     int u) {
  const int* a = s0.phases().data();
  const int* b = s1.phases().data();
  const int l = static_cast<int>(s0.length());
  if (u >= 0) {
    accumulate_products(acc, a + u, b, l - u);
  } else {
    accumulate_products(acc, a, b - u, l + u);
  }
}

}  // namespace

CycloInt accf(const PhaseSequence& s0, const PhaseSequence& s1, int u) {
  require_compatible(s0, s1);
  require_shift(u, s0.length());
  CycloInt acc(s0.q());
  accumulate_accf(acc, s0, s1, u);
  return acc;
}

CycloInt aacf(const PhaseSequence& s, int u) { return accf(s, s, u); }

CycloInt pccf(const PhaseSequence& s0, const PhaseSequence& s1, int u) {
  require_compatible(s0, s1);
  require_shift(u, s0.length());
  const int* a = s0.phases().data();
  const int* b = s1.phases().data();
  const int l = static_cast<int>(s0.length());
  const int shift = u >= 0 ? u : l + u;
  CycloInt acc(s0.q());
  accumulate_products(acc, a + shift, b, l - shift);
  accumulate_products(acc, a, b + (l - shift), shift);
  return acc;
}

CycloInt pccf_via_accf(const PhaseSequence& s0, const PhaseSequence& s1, int u) {
  require_compatible(s0, s1);
  require_shift(u, s0.length());
  const int l = static_cast<int>(s0.length());
  if (u == 0) return accf(s0, s1, 0);
  if (u > 0) return accf(s0, s1, u) + accf(s1, s0, l - u).conj();
  return accf(s1, s0, -u).conj() + accf(s0, s1, l + u);
}

CycloInt set_corr_sum(const SequenceSet& s0, const SequenceSet& s1, int u) {
  require_compatible(s0, s1);
  require_shift(u, s0.length());
  CycloInt acc(s0.q());
  for (std::size_t n = 0; n < s0.size(); ++n) accumulate_accf(acc, s0[n], s1[n], u);
  return acc;
}

CycloInt cross_channel_sum(const SequenceSet& s0, const SequenceSet& s1, int u) {
  require_compatible(s0, s1);
  require_shift(u, s0.length());
  CycloInt acc(s0.q());
  const std::size_t n_members = s0.size();
  for (std::size_t n = 0; n < n_members; ++n) {
    accumulate_accf(acc, s0[n], s1[(n + 1) % n_members], u);
  }
  return acc;
}

const CycloInt& CorrelationProfile::at(int u) const {
  if (u < first_shift || u > last_shift()) {
    throw ShapeError("shift " + std::to_string(u) + " not in profile");
  }
  return values[static_cast<std::size_t>(u - first_shift)];
}

CorrelationProfile profile(CorrelationKind kind, const PhaseSequence& s0,
                           const PhaseSequence& s1) {
  const int l = static_cast<int>(s0.length());
  CorrelationProfile p{kind, 0, {}};
  switch (kind) {
    case CorrelationKind::kAperiodic:
      p.first_shift = -l + 1;
      for (int u = -l + 1; u < l; ++u) p.values.push_back(accf(s0, s1, u));
      break;
    case CorrelationKind::kPeriodic:
      for (int u = 0; u < l; ++u) p.values.push_back(pccf(s0, s1, u));
      break;
    default:
      throw ShapeError("set-level profile requested for single sequences");
  }
  return p;
}

CorrelationProfile profile(CorrelationKind kind, const SequenceSet& s0,
                           const SequenceSet& s1) {
  const int l = static_cast<int>(s0.length());
  CorrelationProfile p{kind, -l + 1, {}};
  switch (kind) {
    case CorrelationKind::kSetSum:
      for (int u = -l + 1; u < l; ++u) p.values.push_back(set_corr_sum(s0, s1, u));
      break;
    case CorrelationKind::kCrossChannel:
      for (int u = -l + 1; u < l; ++u) p.values.push_back(cross_channel_sum(s0, s1, u));
      break;
    default:
      throw ShapeError("sequence-level profile requested for sets");
  }
  return p;
}

CorrelationProfile restrict_profile(const CorrelationProfile& p, int first, int last) {
  if (first > last) throw ShapeError("empty shift range");
  if (first < p.first_shift || last > p.last_shift()) {
    throw ShapeError("shift range outside profile");
  }
  CorrelationProfile out{p.kind, first, {}};
  for (int u = first; u <= last; ++u) out.values.push_back(p.at(u));
  return out;
}

double magnitude(const CycloInt& value) {
  if (auto norm = value.exact_norm()) return std::sqrt(static_cast<double>(*norm));
  return value.magnitude();
}

std::string profile_to_csv(const CorrelationProfile& p) {
  std::ostringstream out;
  out << "u,magnitude,is_zero\n";
  for (int u = p.first_shift; u <= p.last_shift(); ++u) {
    const CycloInt& v = p.at(u);
    const bool zero = v.is_zero();
    char buf[64];
    if (zero) {
      std::snprintf(buf, sizeof buf, "0");
    } else {
      std::snprintf(buf, sizeof buf, "%.12g", magnitude(v));
    }
    out << u << ',' << buf << ',' << (zero ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace eczcs
