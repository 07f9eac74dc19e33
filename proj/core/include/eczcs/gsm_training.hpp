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

#include <Eigen/Dense>

#include "eczcs/cyclo_int.hpp"
#include "eczcs/sequence.hpp"
#include "eczcs/verify.hpp"

namespace eczcs {

struct GsmConfig {
  int nt = 4;  // transmit antennas
  int na = 2;  // active antennas (RF chains)
  int modulation_order = 2;

  int blocks() const { return (nt + na - 1) / na; }  // V
};

void validate_gsm_config(const GsmConfig& cfg);

/// Nt x L' training matrix over Z_q plus a silent marker, L' = N * V * L.
/// Entries are phases in [0, q) or kSilent.
class TrainingMatrix {
 public:
  static constexpr int kSilent = -1;

  TrainingMatrix(int q, GsmConfig cfg, std::size_t set_size, std::size_t length,
                 std::vector<std::vector<int>> rows, std::string source_id = {});

  int q() const noexcept { return q_; }
  const GsmConfig& config() const noexcept { return cfg_; }
  std::size_t rows() const noexcept { return rows_.size(); }   // Nt
  std::size_t cols() const noexcept { return rows_.front().size(); }  // L'
  std::size_t set_size() const noexcept { return n_; }        // N
  std::size_t sub_length() const noexcept { return l_; }      // L
  std::size_t energy() const noexcept { return n_ * l_; }     // E
  const std::string& source_id() const noexcept { return source_; }
  const std::vector<int>& row(std::size_t r) const { return rows_[r]; }
  int at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  /// For tests that damage a matrix on purpose.
  void set_entry(std::size_t r, std::size_t c, int value);

 private:
  int q_;
  GsmConfig cfg_;
  std::size_t n_;
  std::size_t l_;
  std::vector<std::vector<int>> rows_;
  std::string source_;
};

/// Row r = v*Na + a carries set G^a in training block v: for each member n,
/// the sub-block [0 (vL), g_n^a, 0 ((V-1-v)L)]. The first Nt rows are kept.
TrainingMatrix build_training_matrix(const Family& family, const GsmConfig& cfg,
                                     std::string source_id = {});

/// phi(x_i, x_j; u) = sum_t x_i[(t+u) mod L'] conj(x_j[t]); silent entries
/// contribute nothing.
CycloInt training_pccf(const TrainingMatrix& psi, std::size_t i, std::size_t j, int u);

/// Training block (0-based) of row r.
std::size_t training_block(const TrainingMatrix& psi, std::size_t r);

/// Column sparsity, per-row energy E and
///   phi(x_i, x_i; 0) = E, phi(x_i, x_i; u) = 0 for 1 <= u <= lambda,
///   phi(x_i, x_j; u) = 0 for i != j, 0 <= u <= lambda.
/// Correlation violations are labelled by the blocks a, b of rows i, j:
/// "case1" (a == b), "case2" (a == b + 1), "case3" (a == 0, b == V-1) or
/// "other". A column must hold one non-zero entry per row present in its
/// training block: Na, or fewer in a truncated last block.
Verdict check_design_criterion(const TrainingMatrix& psi, int lambda);

/// X = [X_1 ... X_Nt] with X_p(t, c) = x_p[(t - c) mod L'], c = 0..lambda.
Eigen::MatrixXcd build_ls_model_matrix(const TrainingMatrix& psi, int lambda);

/// X^H X evaluated exactly: entry ((p, c), (p', c')) = phi(x_p', x_p; c - c').
/// Row-major over Nt*(lambda+1) columns.
std::vector<CycloInt> exact_gram(const TrainingMatrix& psi, int lambda);

/// exact_gram equals E times the identity.
bool gram_is_scaled_identity(const TrainingMatrix& psi, int lambda);

std::string training_matrix_to_csv(const TrainingMatrix& psi);
std::string training_matrix_to_json(const TrainingMatrix& psi);

/// Antenna activation patterns, each an Nt-vector of 0/1 with Na ones;
/// pattern index i carries bits_per_pattern bits, most significant first.
struct ActivationTable {
  std::vector<std::vector<int>> patterns;
  int bits_per_pattern = 0;
};

/// 2^floor(log2 C(Nt, Na)) patterns. (Nt, Na) = (4, 2) uses the reference
/// table; other configurations take the lexicographically first index
/// combinations.
ActivationTable activation_table(const GsmConfig& cfg);

/// BPSK GSM symbols: each symbol consumes the pattern bits then one bit per
/// active antenna (0 -> +1, 1 -> -1) in increasing antenna order. Returns
/// Nt rows of {0, +1, -1}, one column per symbol.
std::vector<std::vector<int>> map_bits_to_gsm_block(std::string_view bits, const GsmConfig& cfg);

}  // namespace eczcs
