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

#include "eczcs/construct.hpp"


#include "eczcs/error.hpp"
#include "eczcs/gbf.hpp"
#include "eczcs/io.hpp"

namespace eczcs {

namespace {

constexpr std::string_view kTable3 = R"(# binary (2,2,12,10)-ZCCS
[G0]
++++--+-+-++
-++--+++++-+
[G1]
+-+++++--++-
--+-+-++----
)";

PhaseSequence reversed(const PhaseSequence& s) {
  std::vector<int> phases(s.phases().rbegin(), s.phases().rend());
  return PhaseSequence(s.q(), std::move(phases));
}

PhaseSequence conjugated(const PhaseSequence& s) {
  std::vector<int> phases;
  for (int p : s.phases()) phases.push_back((s.q() - p) % s.q());
  return PhaseSequence(s.q(), std::move(phases));
}

// (a, b) together with its mate (conj(rev(b)), -conj(rev(a))).
Family golay_ccc(const PhaseSequence& a, const PhaseSequence& b) {
  SequenceSet first({a, b});
  SequenceSet mate({conjugated(reversed(b)), negate(conjugated(reversed(a)))});
  return Family({first, mate});
}

PhaseSequence binary(std::initializer_list<int> signs) {
  std::vector<int> phases;
  for (int s : signs) phases.push_back(s > 0 ? 0 : 1);
  return PhaseSequence(2, std::move(phases));
}

PartitionSpec single_path(int m) {
  PartitionSpec spec{m, {{}}};
  for (int i = 1; i <= m; ++i) spec.paths[0].push_back(i);
  return spec;
}

// Interleaves the two members of each set: (s0[0], s1[0], s0[1], ...) and
// the same with s1 negated.
Family interleaved_pairs(const Family& f) {
  std::vector<SequenceSet> sets;
  for (const auto& set : f) {
    std::vector<int> plus;
    std::vector<int> minus;
    for (std::size_t t = 0; t < set.length(); ++t) {
      plus.push_back(set[0][t]);
      plus.push_back(set[1][t]);
      minus.push_back(set[0][t]);
      minus.push_back((set[1][t] + set.q() / 2) % set.q());
    }
    sets.emplace_back(std::vector<PhaseSequence>{PhaseSequence(set.q(), plus),
                                                 PhaseSequence(set.q(), minus)});
  }
  return Family(std::move(sets));
}

// {c || c} and {c || -c} for every set of f.
Family repeated_sets(const Family& f) {
  std::vector<SequenceSet> sets;
  for (const auto& set : f) {
    std::vector<PhaseSequence> same;
    for (const auto& c : set) same.push_back(concat(c, c));
    sets.emplace_back(std::move(same));
  }
  for (const auto& set : f) {
    std::vector<PhaseSequence> flipped;
    for (const auto& c : set) flipped.push_back(concat(c, negate(c)));
    sets.emplace_back(std::move(flipped));
  }
  return Family(std::move(sets));
}

std::vector<SeedLibraryEntry> build_catalog() {
  std::vector<SeedLibraryEntry> out;
  const Family table3 = parse_family_text(kTable3);
  out.push_back({"paper-table3", table3, SeedClass::kZccs, 10, "reference (2,2,12,10)-ZCCS"});

  for (int m = 1; m <= 4; ++m) {
    Family f = lemma2_ccc(single_path(m), 2);
    const std::size_t len = f.length();
    out.push_back({"lemma2-ccc-2x" + std::to_string(len), std::move(f), SeedClass::kCcc, len,
                   "GBF complete complementary code, one path"});
  }
  out.push_back({"lemma2-ccc-4x4", lemma2_ccc({2, {{1}, {2}}}, 2), SeedClass::kCcc, 4,
                 "GBF complete complementary code, two singleton paths"});
  out.push_back({"lemma2-ccc-4x16", lemma2_ccc({4, {{1, 2}, {3, 4}}}, 2), SeedClass::kCcc, 16,
                 "GBF complete complementary code, two paths"});

  PhaseSequence a = binary({1, 1, -1, 1, -1, 1, -1, -1, 1, 1});
  PhaseSequence b = binary({1, 1, -1, 1, 1, 1, 1, 1, -1, -1});
  for (int doubling = 0; doubling < 3; ++doubling) {
    out.push_back({"golay-ccc-2x" + std::to_string(a.length()), golay_ccc(a, b), SeedClass::kCcc,
                   a.length(), "Golay pair of length 10 and its mate, doubled " +
                                   std::to_string(doubling) + " time(s)"});
    PhaseSequence next_a = concat(a, b);
    PhaseSequence next_b = concat(a, negate(b));
    a = std::move(next_a);
    b = std::move(next_b);
  }

  out.push_back({"zccs-interleaved-table3", interleaved_pairs(table3), SeedClass::kZccs, 20,
                 "reference seed sets interleaved, (2,2,24,20)-ZCCS"});
  out.push_back({"zccs-repeat-ccc16", repeated_sets(lemma2_ccc(single_path(4), 2)),
                 SeedClass::kZccs, 16, "(2,16)-CCC sets repeated and sign-flipped, (4,2,32,16)-ZCCS"});

  for (const auto& entry : out) {
    const Verdict v = check_declared(entry.family, entry.declared, entry.zone);
    if (!v.passed()) {
      throw ConstructionError("catalog seed '" + entry.id + "' fails its declared class");
    }
  }
  return out;
}

}  // namespace

Theorem2Result theorem2_construct(const Family& seed, std::size_t seed_zone, bool force) {
  const std::size_t n = seed.set_size();
  if (n % 2 != 0) throw ConstructionError("interleaving needs an even set size, got N=" + std::to_string(n));
  if (seed_zone < 1) throw ConstructionError("seed zone must be at least 1");
  Theorem2Result result{seed, 0, false, check_zccs(seed, seed_zone)};
  if (!result.seed_verdict.passed() && !force) {
    throw ConstructionError("seed fails check_zccs at Z=" + std::to_string(seed_zone));
  }
  result.seed_is_mocs = check_mocs(seed).passed();
  std::vector<SequenceSet> sets;
  for (const auto& s : seed) {
    std::vector<PhaseSequence> g(n, s[0]);
    for (std::size_t i = 0; i < n / 2; ++i) {
      g[i] = concat(s[2 * i], s[2 * i + 1]);
      g[n / 2 + i] = concat(s[2 * i], negate(s[2 * i + 1]));
    }
    sets.emplace_back(std::move(g));
  }
  result.family = Family(std::move(sets));
  result.zone = result.seed_is_mocs ? seed.length() : seed_zone - 1;
  return result;
}

std::string_view seed_class_name(SeedClass c) {
  switch (c) {
    case SeedClass::kZccs: return "zccs";
    case SeedClass::kMocs: return "mocs";
    case SeedClass::kCcc: return "ccc";
  }
  return "zccs";
}

Verdict check_declared(const Family& family, SeedClass declared, std::size_t zone) {
  switch (declared) {
    case SeedClass::kZccs: return check_zccs(family, zone);
    case SeedClass::kMocs: return check_mocs(family);
    case SeedClass::kCcc: return check_ccc(family);
  }
  return check_zccs(family, zone);
}

const std::vector<SeedLibraryEntry>& seed_catalog() {
  static const std::vector<SeedLibraryEntry> catalog = build_catalog();
  return catalog;
}

std::vector<const SeedLibraryEntry*> find_seeds(std::string_view filter) {
  std::vector<const SeedLibraryEntry*> out;
  for (const auto& entry : seed_catalog()) {
    if (entry.id.find(filter) != std::string::npos) out.push_back(&entry);
  }
  return out;
}

const SeedLibraryEntry& seed_by_id(std::string_view id) {
  for (const auto& entry : seed_catalog()) {
    if (entry.id == id) return entry;
  }
  throw ParseError("unknown seed '" + std::string(id) + "'");
}

}  // namespace eczcs
