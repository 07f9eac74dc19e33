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
#include <string>
#include <string_view>
#include <vector>

#include "eczcs/sequence.hpp"
#include "eczcs/verify.hpp"

namespace eczcs {

struct Theorem2Result {
  Family family;
  std::size_t zone = 0;
  bool seed_is_mocs = false;
  Verdict seed_verdict;  // check_zccs of the seed at its declared zone
};

/// From an (M, N, L, Z+1)-ZCCS with N even, builds M sets of length 2L:
///   g_n       = s_{2n} || s_{2n+1}
///   g_{N/2+n} = s_{2n} || -s_{2n+1}        for 0 <= n < N/2.
/// The zone is seed_zone - 1, or L when the seed is an MOCS. A seed failing
/// check_zccs at seed_zone is refused unless `force` is set.
Theorem2Result theorem2_construct(const Family& seed, std::size_t seed_zone, bool force = false);

enum class SeedClass { kZccs, kMocs, kCcc };

std::string_view seed_class_name(SeedClass c);

struct SeedLibraryEntry {
  std::string id;
  Family family;
  SeedClass declared;
  std::size_t zone;  // declared Z; L for MOCS and CCC entries
  std::string note;
};

/// Built-in seeds, each verified against its declared class on first use.
const std::vector<SeedLibraryEntry>& seed_catalog();

/// Entries whose id contains `filter`; an empty filter returns everything.
std::vector<const SeedLibraryEntry*> find_seeds(std::string_view filter = {});

/// Exact id lookup; throws ParseError when absent.
const SeedLibraryEntry& seed_by_id(std::string_view id);

/// Verdict for `family` under `declared` at `zone`.
Verdict check_declared(const Family& family, SeedClass declared, std::size_t zone);

}  // namespace eczcs
