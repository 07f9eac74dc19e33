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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eczcs/sequence.hpp"

namespace eczcs {

/// (M, N, L, Z) over Z_q. Z <= L.
struct FamilyParams {
  std::size_t M = 0;
  std::size_t N = 0;
  std::size_t L = 0;
  std::size_t Z = 0;
  int q = 2;
};

FamilyParams params_of(const Family& family, std::size_t zone);

/// One failed correlation constraint. `first`/`second` are set indices for
/// family checks and sequence (row) indices for sequence-set and training
/// checks; `shift` is the signed shift at which the value is non-zero.
struct Violation {
  std::string check;
  std::size_t first = 0;
  std::size_t second = 0;
  int shift = 0;
  double magnitude = 0.0;
};

/// Every violated constraint, not just the first one.
struct Verdict {
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  void merge(const Verdict& other);
};

std::string verdict_to_json(const Verdict& verdict);

// Each checker evaluates its windows at both signs of the shift. Shifts whose
// magnitude reaches L are vacuous (the aperiodic sums are empty there).

/// (N, L, Z)-ZCZ set under periodic correlation: zero for 1 <= |u| <= Z on
/// the diagonal and |u| <= Z off it.
Verdict check_zcz_set(const SequenceSet& set, std::size_t zone);

/// Z <= L/N - 1 in general and the conjectured Z <= L/(2N) for q = 2,
/// rounded down.
std::size_t tang_fan_matsufuji_bound(std::size_t n, std::size_t length, int q);

/// (M, N, L, Z)-ZCCS: peak N*L at u = 0, zero for 0 < |u| < Z within a set,
/// zero for |u| < Z across sets.
Verdict check_zccs(const Family& family, std::size_t zone);

/// ZCCS with Z = L.
Verdict check_mocs(const Family& family);

/// MOCS with M = N.
Verdict check_ccc(const Family& family);

/// Same-set sums vanish on (T1 u T2) n T, cross-set sums on T1 u T2 u {0},
/// with T1 = {1..Z}, T2 = {L-Z..L-1}, T = {1..L-1}.
Verdict check_szccs(const Family& family, std::size_t zone);

/// Enhanced cross Z-complementary set: the check_szccs windows (C1) plus a
/// vanishing cross-channel sum on T2 for every ordered pair of sets,
/// including a set with itself (C2).
Verdict check_eczcs(const Family& family, std::size_t zone);

/// Largest Z in [0, L] for which check_eczcs passes; nullopt when even Z = 0
/// fails (the sets are not orthogonal at u = 0).
std::optional<std::size_t> measure_zcz_width(const Family& family);

/// Z <= N*L/M - 1, or Z <= N*L/(2M) for q = 2, rounded down.
std::size_t eczcs_bound(std::size_t m, std::size_t n, std::size_t length, int q);

/// Z meets the bound with equality (no rounding) and check_eczcs passes.
bool is_optimal(const Family& family, std::size_t zone);

/// d_m = g_0^m || g_1^m || ... || g_{N-1}^m for every set m.
SequenceSet flatten_to_zcz(const Family& family);

}  // namespace eczcs
