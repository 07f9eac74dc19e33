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

#include "eczcs/gbf.hpp"

#include <algorithm>
#include <set>

#include "eczcs/error.hpp"
#include "json.hpp"

namespace eczcs {

namespace {

int mod_q(long long value, int q) {
  const long long r = value % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

void require_q(int q) {
  if (q < 2 || q % 2 != 0) throw ConstructionError("q must be even and >= 2");
}

void require_m(int m) {
  if (m < 0 || m > kMaxGbfVariables) {
    throw ConstructionError("m must lie in [0, " + std::to_string(kMaxGbfVariables) + "]");
  }
}

std::vector<int> normalized_eta(const std::vector<int>& eta, int m, int q) {
  if (eta.empty()) return std::vector<int>(static_cast<std::size_t>(m) + 1, 0);
  if (eta.size() != static_cast<std::size_t>(m) + 1) {
    throw ConstructionError("eta needs m + 1 entries (eta_0..eta_m)");
  }
  std::vector<int> out;
  for (int e : eta) out.push_back(mod_q(e, q));
  return out;
}

int bit(std::uint32_t value, int index) { return static_cast<int>((value >> index) & 1U); }

// Adds (q/2) * x_var to every entry of `phases`.
void add_half_linear(std::vector<int>& phases, int var, int q) {
  for (std::size_t i = 0; i < phases.size(); ++i) {
    if (bit(static_cast<std::uint32_t>(i), var - 1)) phases[i] = (phases[i] + q / 2) % q;
  }
}

}  // namespace

int evaluate_gbf(const Gbf& f, std::uint32_t i) {
  require_m(f.m);
  require_q(f.q);
  if (i >= (1U << f.m)) throw ShapeError("GBF index out of range");
  long long sum = 0;
  for (const auto& term : f.terms) {
    bool on = true;
    for (int var : term.vars) {
      if (var < 1 || var > f.m) throw ConstructionError("GBF variable index out of range");
      on = on && bit(i, var - 1);
    }
    if (on) sum += term.coeff;
  }
  return mod_q(sum, f.q);
}

PhaseSequence gbf_sequence(const Gbf& f) {
  require_m(f.m);
  std::vector<int> phases(std::size_t{1} << f.m);
  for (std::uint32_t i = 0; i < phases.size(); ++i) phases[i] = evaluate_gbf(f, i);
  return PhaseSequence(f.q, std::move(phases));
}

void validate_partition(const PartitionSpec& spec) {
  require_m(spec.m);
  if (spec.m < 1) throw ConstructionError("partition needs m >= 1");
  if (spec.paths.empty()) throw ConstructionError("partition needs at least one part");
  std::vector<int> seen(static_cast<std::size_t>(spec.m) + 1, 0);
  for (const auto& path : spec.paths) {
    if (path.empty()) throw ConstructionError("partition parts must be non-empty");
    for (int var : path) {
      if (var < 1 || var > spec.m) throw ConstructionError("partition entry out of range");
      if (seen[var]++) throw ConstructionError("variable " + std::to_string(var) + " repeated");
    }
  }
  for (int var = 1; var <= spec.m; ++var) {
    if (!seen[var]) throw ConstructionError("variable " + std::to_string(var) + " not covered");
  }
}

bool satisfies_trailing_constraint(const PartitionSpec& spec, int v) {
  for (int g = 1; g <= spec.k() - v; ++g) {
    if (spec.paths[v + g - 1].front() != spec.m - g + 1) return false;
  }
  return true;
}

Gbf build_theorem3_f(const PartitionSpec& spec, int q, const std::vector<int>& eta) {
  require_q(q);
  validate_partition(spec);
  const auto e = normalized_eta(eta, spec.m, q);
  Gbf f{spec.m, q, {}};
  for (const auto& path : spec.paths) {
    for (std::size_t b = 0; b + 1 < path.size(); ++b) {
      f.terms.push_back({{path[b], path[b + 1]}, q / 2});
    }
  }
  for (int i = 1; i <= spec.m; ++i) {
    if (e[i] != 0) f.terms.push_back({{i}, e[i]});
  }
  if (e[0] != 0) f.terms.push_back({{}, e[0]});
  return f;
}

ConstructedFamily theorem3_construct(const Theorem3Spec& spec) {
  const auto& part = spec.partition;
  const PhaseSequence base = gbf_sequence(build_theorem3_f(part, spec.q, spec.eta));
  const int k = part.k();
  if (spec.v < 1 || spec.v > k) throw ConstructionError("v must satisfy 1 <= v <= k");
  if (!satisfies_trailing_constraint(part, spec.v)) {
    throw ConstructionError("parts v+1..k must start at m, m-1, ...");
  }
  std::vector<SequenceSet> sets;
  for (std::uint32_t p = 0; p < (1U << k); ++p) {
    std::vector<PhaseSequence> members;
    for (std::uint32_t n = 0; n < (1U << spec.v); ++n) {
      std::vector<int> phases(base.phases().begin(), base.phases().end());
      for (int a = 1; a <= spec.v; ++a) {
        if (bit(n, spec.v - a)) add_half_linear(phases, part.paths[a - 1].front(), spec.q);
      }
      for (int a = 1; a <= k; ++a) {
        if (bit(p, a - 1)) add_half_linear(phases, part.paths[a - 1].back(), spec.q);
      }
      members.emplace_back(spec.q, std::move(phases));
    }
    sets.emplace_back(std::move(members));
  }
  const std::size_t zone = std::size_t{1} << (part.paths.front().front() - 1);
  return {Family(std::move(sets)), zone};
}

Family lemma2_ccc(const PartitionSpec& spec, int q, const std::vector<int>& eta) {
  const PhaseSequence base = gbf_sequence(build_theorem3_f(spec, q, eta));
  const int k = spec.k();
  std::vector<SequenceSet> sets;
  for (std::uint32_t nu = 0; nu < (1U << k); ++nu) {
    std::vector<PhaseSequence> members;
    for (std::uint32_t kappa = 0; kappa < (1U << k); ++kappa) {
      std::vector<int> phases(base.phases().begin(), base.phases().end());
      for (int a = 1; a <= k; ++a) {
        if (bit(kappa, a - 1)) add_half_linear(phases, spec.paths[a - 1].front(), q);
        if (bit(nu, a - 1)) add_half_linear(phases, spec.paths[a - 1].back(), q);
      }
      members.emplace_back(q, std::move(phases));
    }
    sets.emplace_back(std::move(members));
  }
  return Family(std::move(sets));
}

PartitionSpec optimal_theorem3_params(int m, int k, int v) {
  require_m(m);
  if (k < 1 || v < 1 || v > k || k > m) {
    throw ConstructionError("need 1 <= v <= k <= m");
  }
  const int head = m - k + v;
  if (head < 1) throw ConstructionError("m - k + v must be positive");
  PartitionSpec spec{m, std::vector<std::vector<int>>(static_cast<std::size_t>(k))};
  spec.paths[0].push_back(head);
  int next = 1;
  for (int a = 2; a <= v; ++a) spec.paths[a - 1].push_back(next++);
  for (; next < head; ++next) spec.paths[0].push_back(next);
  for (int g = 1; g <= k - v; ++g) spec.paths[v + g - 1].push_back(m - g + 1);
  validate_partition(spec);
  return spec;
}

std::vector<PartitionSpec> enumerate_partitions(int m) {
  require_m(m);
  std::vector<PartitionSpec> out;
  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) perm[i] = i + 1;
  // Every ordered list of paths is a permutation of {1..m} cut into
  // consecutive pieces; each (permutation, cut set) pair is distinct.
  do {
    const std::uint32_t cuts = m > 0 ? 1U << (m - 1) : 0;
    for (std::uint32_t mask = 0; mask < cuts; ++mask) {
      PartitionSpec spec{m, {{}}};
      for (int i = 0; i < m; ++i) {
        spec.paths.back().push_back(perm[i]);
        if (i + 1 < m && bit(mask, i)) spec.paths.emplace_back();
      }
      out.push_back(std::move(spec));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Theorem3Spec theorem3_spec_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("construction spec: ") + e.what());
  }
  try {
    Theorem3Spec spec;
    spec.partition.m = doc.at("m").get<int>();
    spec.q = doc.value("q", 2);
    spec.v = doc.value("v", 1);
    spec.partition.paths = doc.at("pi").get<std::vector<std::vector<int>>>();
    if (doc.contains("eta")) spec.eta = doc.at("eta").get<std::vector<int>>();
    if (doc.contains("k") && doc.at("k").get<int>() != spec.partition.k()) {
      throw ParseError("construction spec: k disagrees with pi");
    }
    if (doc.contains("U")) {
      const auto u = doc.at("U").get<std::vector<std::vector<int>>>();
      if (u.size() != spec.partition.paths.size()) {
        throw ParseError("construction spec: U disagrees with pi");
      }
      for (std::size_t a = 0; a < u.size(); ++a) {
        if (std::set<int>(u[a].begin(), u[a].end()) !=
            std::set<int>(spec.partition.paths[a].begin(), spec.partition.paths[a].end())) {
          throw ParseError("construction spec: U_" + std::to_string(a + 1) + " disagrees with pi");
        }
      }
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("construction spec: ") + e.what());
  }
}

std::string theorem3_spec_to_json(const Theorem3Spec& spec) {
  nlohmann::json u = nlohmann::json::array();
  for (auto path : spec.partition.paths) {
    std::sort(path.begin(), path.end());
    u.push_back(path);
  }
  nlohmann::json doc = {{"m", spec.partition.m},
                        {"q", spec.q},
                        {"k", spec.partition.k()},
                        {"v", spec.v},
                        {"U", u},
                        {"pi", spec.partition.paths},
                        {"eta", normalized_eta(spec.eta, spec.partition.m, spec.q)}};
  return doc.dump();
}

Theorem3Spec theorem3_preset(std::string_view name) {
  Theorem3Spec spec{{5, {{4, 1, 2}, {5, 3}}}, 2, 1, {}};
  if (name == "example3") return spec;
  if (name == "example3-table5") {
    spec.eta = {0, 0, 1, 0, 0, 1};
    return spec;
  }
  throw ParseError("unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> theorem3_preset_names() { return {"example3", "example3-table5"}; }

}  // namespace eczcs
