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
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "eczcs/gsm_training.hpp"
#include "eczcs/sequence.hpp"

namespace eczcs {

/// Nt x (lambda+1) taps, i.i.d. CN(0, 1/(lambda+1)).
struct ChannelRealization {
  Eigen::MatrixXcd taps;

  /// Stacked per antenna: index p*(lambda+1) + i, matching the LS model
  /// matrix columns.
  Eigen::VectorXcd stacked() const;
};

ChannelRealization sample_channel(int lambda, int nt, std::mt19937_64& rng);

/// sigma^2 = 10^(-EbN0/10) for unit-energy symbols.
double noise_variance(double ebn0_db);

struct LsEstimate {
  Eigen::VectorXcd h;
  double residual = 0.0;  // ||X^H X h - X^H y||
};

/// (X^H X)^{-1} X^H y via an LDLT factorisation of the normal matrix.
/// Throws RankDeficientError naming `matrix_id` when X^H X is singular.
LsEstimate ls_estimate(const Eigen::MatrixXcd& x, const Eigen::VectorXcd& y,
                       const std::string& matrix_id = {});

/// sigma^2 / (columns of X) * Tr((X^H X)^{-1}).
double analytic_mse(const Eigen::MatrixXcd& x, double sigma2, const std::string& matrix_id = {});

struct SimConfig {
  std::vector<double> ebn0_db{16.0};
  std::vector<int> lambdas{9};
  std::size_t trials = 10000;
  std::uint64_t master_seed = 1;
  bool noiseless = false;
  unsigned threads = 1;
};

void validate_sim_config(const SimConfig& cfg);

struct MsePoint {
  double ebn0_db = 0.0;
  int lambda = 0;
  double empirical = 0.0;
  double analytic = 0.0;
  double floor = 0.0;  // sigma^2 / E
  std::size_t trials = 0;
  bool failed = false;
  std::string message;
};

struct MseReport {
  std::string matrix_id;
  std::vector<MsePoint> points;
};

/// Seed of trial `trial` at grid point `point`. Independent of the training
/// matrix, so matrices compared under one master seed see the same channels
/// and noise.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t point, std::uint64_t trial);

/// Average of ||h_hat - h||^2 / (Nt (lambda+1)) over the trials at every
/// (lambda, EbN0) pair, lambda outermost. A singular model matrix marks the
/// point failed instead of throwing. Per-trial errors are summed in trial
/// order, so the result does not depend on the thread count.
MseReport monte_carlo_mse(const TrainingMatrix& psi, const SimConfig& cfg);

/// Columns EbN0_dB,lambda,empirical_mse,analytic_mse,floor,trials,matrix_id
/// after a '#' header line stating the noise convention.
std::string mse_report_to_csv(const MseReport& report);

/// Same layout as build_training_matrix with M = Na sets of independent
/// uniform binary sequences.
TrainingMatrix baseline_random_binary(const GsmConfig& cfg, std::size_t set_size,
                                      std::size_t length, std::uint64_t seed);

/// Zadoff-Chu sequence over Z_{2L}: phase -r k^2 (L even) or -r k(k+1)
/// (L odd). Throws ConstructionError unless gcd(r, L) = 1.
PhaseSequence zadoff_chu(std::size_t length, int root);

/// The `count` smallest roots coprime to the length.
std::vector<int> zadoff_chu_roots(std::size_t length, std::size_t count);

/// Set a, member n carries root roots[a*N + n]; roots default to
/// zadoff_chu_roots(L, Na*N).
TrainingMatrix baseline_zadoff_chu(const GsmConfig& cfg, std::size_t set_size, std::size_t length,
                                   std::vector<int> roots = {});

/// A ZCCS placed in the same block layout.
TrainingMatrix baseline_zccs(const Family& zccs, const GsmConfig& cfg, std::string source_id = {});

}  // namespace eczcs
