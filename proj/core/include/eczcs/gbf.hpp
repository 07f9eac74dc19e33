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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eczcs/sequence.hpp"

namespace eczcs {

inline constexpr int kMaxGbfVariables = 20;

/// coeff * x_{vars[0]} * x_{vars[1]} * ...; an empty variable list is the
/// constant term. Variables are 1-based.
struct GbfTerm {
  std::vector<int> vars;
  int coeff = 0;
};

/// f: Z_2^m -> Z_q.
struct Gbf {
  int m = 0;
  int q = 2;
  std::vector<GbfTerm> terms;
};

/// f(i_1, ..., i_m) mod q where i = sum_k i_k 2^{k-1} (i_1 least significant).
int evaluate_gbf(const Gbf& f, std::uint32_t i);

/// (f(0), f(1), ..., f(2^m - 1)).
PhaseSequence gbf_sequence(const Gbf& f);

/// Ordered parts of {1..m}. paths[a] lists pi_{a+1}(1), pi_{a+1}(2), ...,
/// so U_{a+1} is the set of its entries and m_{a+1} its length.
struct PartitionSpec {
  int m = 0;
  std::vector<std::vector<int>> paths;

  int k() const noexcept { return static_cast<int>(paths.size()); }
};

/// Throws ConstructionError unless the paths are non-empty and cover
/// {1..m} exactly once.
void validate_partition(const PartitionSpec& spec);

/// pi_{v+g}(1) = m - g + 1 for g = 1..k-v.
bool satisfies_trailing_constraint(const PartitionSpec& spec, int v);

/// (q/2) sum_a sum_b x_{pi_a(b)} x_{pi_a(b+1)} + sum_i eta_i x_i + eta_0.
/// `eta` holds (eta_0, ..., eta_m) or is empty for all zeros.
Gbf build_theorem3_f(const PartitionSpec& spec, int q, const std::vector<int>& eta = {});

struct Theorem3Spec {
  PartitionSpec partition;
  int q = 2;
  int v = 1;
  std::vector<int> eta;
};

struct ConstructedFamily {
  Family family;
  std::size_t zone;
};

/// 2^k sets of 2^v sequences of length 2^m. Set p, member n:
///   f + (q/2)(sum_{a<=v} n_{v-a+1} x_{pi_a(1)} + sum_{a<=k} p_a x_{pi_a(m_a)})
/// with p_1, n_1 the least significant bits. The zone is 2^{pi_1(1)-1}.
/// Requires 1 <= v <= k and the trailing constraint.
ConstructedFamily theorem3_construct(const Theorem3Spec& spec);

/// 2^k sets C^nu, each holding 2^k sequences c_kappa^nu:
///   f + (q/2) sum_a kappa_a x_{pi_a(1)} + (q/2) sum_a nu_a x_{pi_a(m_a)}.
Family lemma2_ccc(const PartitionSpec& spec, int q, const std::vector<int>& eta = {});

/// Canonical partition with pi_1(1) = m - k + v: the trailing parts are the
/// singletons {m}, {m-1}, ...; parts 2..v take one variable each from 1, 2,
/// ...; the rest follow pi_1(1) in part 1 in increasing order.
PartitionSpec optimal_theorem3_params(int m, int k, int v);

/// Every ordered list of non-empty paths covering {1..m}.
std::vector<PartitionSpec> enumerate_partitions(int m);

/// {m, q, k, v, U, pi, eta}. U and k are optional; when present they must
/// agree with pi.
Theorem3Spec theorem3_spec_from_json(std::string_view json_text);
std::string theorem3_spec_to_json(const Theorem3Spec& spec);

/// Named constructions. "example3" uses the stated parameters with eta = 0;
/// "example3-table5" adds eta_2 = eta_5 = 1, which yields the reference
/// sequences.
Theorem3Spec theorem3_preset(std::string_view name);
std::vector<std::string> theorem3_preset_names();

}  // namespace eczcs
