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

#pragma once

#include <string>
#include <vector>

#include "eczcs/cyclo_int.hpp"
#include "eczcs/sequence.hpp"

namespace eczcs {

// Shift convention: u >= 0 advances the first argument, i.e.
//   accf(a, b, u) = sum_k a[k+u] * conj(b[k])          for 0 <= u <= L-1
//   accf(a, b, u) = sum_k a[k]   * conj(b[k-u])        for -L+1 <= u < 0
// All results are exact elements of Z[xi_q].

CycloInt accf(const PhaseSequence& s0, const PhaseSequence& s1, int u);
CycloInt aacf(const PhaseSequence& s, int u);

/// Periodic cross-correlation, sum_k s0[(k+u) mod L] * conj(s1[k]).
CycloInt pccf(const PhaseSequence& s0, const PhaseSequence& s1, int u);

/// The periodic correlation rebuilt from two aperiodic ones:
///   u = 0:  accf(s0,s1,0)
///   u > 0:  accf(s0,s1,u) + conj(accf(s1,s0,L-u))
///   u < 0:  conj(accf(s1,s0,-u)) + accf(s0,s1,L+u)
CycloInt pccf_via_accf(const PhaseSequence& s0, const PhaseSequence& s1, int u);

/// sum_n accf(S0[n], S1[n], u).
CycloInt set_corr_sum(const SequenceSet& s0, const SequenceSet& s1, int u);

/// sum_n accf(S0[n], S1[(n+1) mod N], u): the cross-channel sum.
CycloInt cross_channel_sum(const SequenceSet& s0, const SequenceSet& s1, int u);

enum class CorrelationKind {
  kAperiodic,     // accf of two sequences
  kPeriodic,      // pccf of two sequences
  kSetSum,        // set_corr_sum of two sets
  kCrossChannel,  // cross_channel_sum of two sets
};

/// Correlation values tabulated over a contiguous shift range.
struct CorrelationProfile {
  CorrelationKind kind;
  int first_shift;
  std::vector<CycloInt> values;

  int last_shift() const { return first_shift + static_cast<int>(values.size()) - 1; }
  const CycloInt& at(int u) const;
};

/// Tabulates over the full range: -L+1..L-1 for aperiodic kinds, 0..L-1 for
/// periodic.
CorrelationProfile profile(CorrelationKind kind, const PhaseSequence& s0,
                           const PhaseSequence& s1);
CorrelationProfile profile(CorrelationKind kind, const SequenceSet& s0,
                           const SequenceSet& s1);

/// Restricts a profile to [first, last]; an empty or out-of-range window
/// throws ShapeError.
CorrelationProfile restrict_profile(const CorrelationProfile& p, int first, int last);

/// |value|, exact up to the final square root for q in {2, 4}.
double magnitude(const CycloInt& value);

/// CSV with header "u,magnitude,is_zero"; integral magnitudes print without
/// a fractional part.
std::string profile_to_csv(const CorrelationProfile& p);

}  // namespace eczcs
