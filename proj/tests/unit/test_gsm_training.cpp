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

#include <gtest/gtest.h>

#include <random>

#include "eczcs/construct.hpp"
#include "eczcs/error.hpp"
#include "eczcs/gbf.hpp"
#include "eczcs/gsm_training.hpp"
#include "sampling.hpp"
#include "support.hpp"

using namespace eczcs;

namespace {

constexpr int S = TrainingMatrix::kSilent;

// The expected row: member n of set `set` in block `block` of V.
std::vector<int> expected_row(const Family& f, std::size_t set, std::size_t block, std::size_t v) {
  std::vector<int> row;
  for (std::size_t n = 0; n < f.set_size(); ++n) {
    for (std::size_t w = 0; w < v; ++w) {
      for (std::size_t t = 0; t < f.length(); ++t) row.push_back(w == block ? f[set][n][t] : S);
    }
  }
  return row;
}

bool has_case(const Verdict& v, const std::string& label, int u, double mag) {
  for (const auto& x : v.violations) {
    if (x.check == label && x.shift == u && x.magnitude == mag) return true;
  }
  return false;
}

}  // namespace

TEST(TrainingMatrix, FourByTwoLayout) {
  const auto t4 = testing_support::fixture("table4");
  const auto psi = build_training_matrix(t4, {4, 2});
  EXPECT_EQ(psi.rows(), 4u);
  EXPECT_EQ(psi.cols(), 96u);
  EXPECT_EQ(psi.energy(), 48u);
  EXPECT_EQ(psi.row(0), expected_row(t4, 0, 0, 2));
  EXPECT_EQ(psi.row(1), expected_row(t4, 1, 0, 2));
  EXPECT_EQ(psi.row(2), expected_row(t4, 0, 1, 2));
  EXPECT_EQ(psi.row(3), expected_row(t4, 1, 1, 2));
}

TEST(TrainingMatrix, EightByThreeLayoutDropsLastRow) {
  const auto t5 = testing_support::fixture("table5");
  const auto psi = build_training_matrix(t5, {8, 3});
  EXPECT_EQ(psi.rows(), 8u);
  EXPECT_EQ(psi.cols(), 192u);
  for (std::size_t r = 0; r < 8; ++r) EXPECT_EQ(psi.row(r), expected_row(t5, r % 3, r / 3, 3)) << r;
}

TEST(TrainingMatrix, DegenerateAndErrors) {
  const Family one({SequenceSet({parse_sequence("+-+", 2)})});
  const auto psi = build_training_matrix(one, {1, 1});
  EXPECT_EQ(psi.row(0), (std::vector<int>{0, 1, 0}));
  EXPECT_THROW(build_training_matrix(one, {2, 2}), ShapeError);
  EXPECT_THROW(build_training_matrix(one, {0, 1}), ShapeError);
  EXPECT_THROW(build_training_matrix(one, {1, 2}), ShapeError);
}

TEST(DesignCriterion, TableFour) {
  const auto psi = build_training_matrix(testing_support::fixture("table4"), {4, 2});
  for (int lambda = 0; lambda <= 9; ++lambda) EXPECT_TRUE(check_design_criterion(psi, lambda).passed()) << lambda;
  const auto v = check_design_criterion(psi, 10);
  EXPECT_FALSE(v.passed());
  EXPECT_TRUE(has_case(v, "case1", 10, 8.0));
  EXPECT_THROW(check_design_criterion(psi, 96), ShapeError);
}

TEST(DesignCriterion, TableFiveBothConfigs) {
  const auto t5 = testing_support::fixture("table5");
  for (GsmConfig cfg : {GsmConfig{4, 2}, GsmConfig{8, 3}}) {
    const auto psi = build_training_matrix(t5, cfg);
    for (int lambda = 0; lambda <= 8; ++lambda) EXPECT_TRUE(check_design_criterion(psi, lambda).passed());
    EXPECT_FALSE(check_design_criterion(psi, 9).passed());
  }
}

TEST(DesignCriterion, SparsityViolation) {
  auto psi = build_training_matrix(testing_support::fixture("table4"), {4, 2});
  psi.set_entry(0, 5, S);
  psi.set_entry(1, 5, S);
  const auto v = check_design_criterion(psi, 0);
  bool found = false;
  for (const auto& x : v.violations) found = found || (x.check == "sparsity" && x.first == 5 && x.second == 0);
  EXPECT_TRUE(found);
  EXPECT_THROW(psi.set_entry(0, 0, 2), ShapeError);
}

TEST(DesignCriterion, HoldsForEveryZoneWithinTheFamily) {
  std::vector<std::pair<Family, std::size_t>> families = {
      {testing_support::fixture("table4"), 9}, {testing_support::fixture("table5"), 8}};
  std::mt19937_64 rng(10);
  while (families.size() < 8) {
    const auto spec = testing_support::sample_theorem3_spec(rng, 4, 2);
    if (spec.partition.k() < 2) continue;
    auto r = theorem3_construct(spec);
    families.emplace_back(std::move(r.family), r.zone);
  }
  for (const auto& [family, zone] : families) {
    for (GsmConfig cfg : {GsmConfig{4, 2}, GsmConfig{6, 2}, GsmConfig{8, 3}}) {
      if (family.set_count() < static_cast<std::size_t>(cfg.na)) continue;
      const auto psi = build_training_matrix(family, cfg);
      for (int lambda = 0; lambda <= static_cast<int>(zone); ++lambda) {
        EXPECT_TRUE(check_design_criterion(psi, lambda).passed());
        EXPECT_TRUE(gram_is_scaled_identity(psi, lambda));
      }
    }
  }
}

TEST(LsModel, ColumnsAreCyclicShifts) {
  const auto psi = build_training_matrix(testing_support::fixture("table4"), {4, 2});
  const auto x0 = build_ls_model_matrix(psi, 0);
  EXPECT_EQ(x0.rows(), 96);
  EXPECT_EQ(x0.cols(), 4);
  const auto x = build_ls_model_matrix(psi, 3);
  EXPECT_EQ(x.cols(), 16);
  // Column c of X_p starts with x_p[L' - c].
  EXPECT_EQ(x(0, 1), x(95, 0));
  EXPECT_EQ(x(1, 1), x(0, 0));
  EXPECT_EQ(x(2, 4 + 2), x(0, 4));
  EXPECT_THROW(build_ls_model_matrix(psi, 96), ShapeError);
}

TEST(LsModel, GramMatchesExactEvaluation) {
  const auto psi = build_training_matrix(testing_support::fixture("table4"), {4, 2});
  for (int lambda : {5, 9, 11}) {
    const auto x = build_ls_model_matrix(psi, lambda);
    const Eigen::MatrixXcd gram = x.adjoint() * x;
    const auto exact = exact_gram(psi, lambda);
    for (Eigen::Index r = 0; r < gram.rows(); ++r) {
      for (Eigen::Index c = 0; c < gram.cols(); ++c) {
        EXPECT_NEAR(std::abs(gram(r, c) - exact[static_cast<std::size_t>(r * gram.cols() + c)].to_complex()), 0.0, 1e-9);
      }
    }
    EXPECT_EQ(gram_is_scaled_identity(psi, lambda), lambda <= 9);
    EXPECT_EQ(check_design_criterion(psi, lambda).passed(), gram_is_scaled_identity(psi, lambda));
  }
}

TEST(Export, CsvAndJson) {
  const Family f({SequenceSet({parse_sequence("+-", 2)}), SequenceSet({parse_sequence("--", 2)})});
  const auto psi = build_training_matrix(f, {3, 2}, "tiny");
  EXPECT_EQ(training_matrix_to_csv(psi), "1,-1,0,0\n-1,-1,0,0\n0,0,1,-1\n");
  const auto json = training_matrix_to_json(psi);
  EXPECT_NE(json.find("\"source\":\"tiny\""), std::string::npos);
  EXPECT_NE(json.find("\"V\":2"), std::string::npos);
  EXPECT_NE(json.find("\"E\":2"), std::string::npos);
  EXPECT_NE(json.find("[0,1,null,null]"), std::string::npos);
  const Family g({SequenceSet({PhaseSequence(4, {1, 3})})});
  EXPECT_EQ(training_matrix_to_csv(build_training_matrix(g, {1, 1})), "0+1i,0-1i\n");
}

TEST(Activation, Tables) {
  const auto t42 = activation_table({4, 2});
  EXPECT_EQ(t42.bits_per_pattern, 2);
  EXPECT_EQ(t42.patterns, (std::vector<std::vector<int>>{{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}, {0, 0, 1, 1}}));
  const auto t21 = activation_table({2, 1});
  EXPECT_EQ(t21.patterns, (std::vector<std::vector<int>>{{1, 0}, {0, 1}}));
  const auto t83 = activation_table({8, 3});
  EXPECT_EQ(t83.bits_per_pattern, 5);
  EXPECT_EQ(t83.patterns.size(), 32u);
  EXPECT_EQ(t83.patterns[0], (std::vector<int>{1, 1, 1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(t83.patterns[1], (std::vector<int>{1, 1, 0, 1, 0, 0, 0, 0}));
  for (const auto& p : t83.patterns) EXPECT_EQ(std::count(p.begin(), p.end(), 1), 3);
  EXPECT_EQ(activation_table({3, 3}).patterns.size(), 1u);
}

TEST(GsmMapping, ExampleBlock) {
  const auto first = map_bits_to_gsm_block("0101", {4, 2});
  EXPECT_EQ(first, (std::vector<std::vector<int>>{{0}, {1}, {-1}, {0}}));
  const auto block = map_bits_to_gsm_block("0101001110101111", {4, 2});
  EXPECT_EQ(block, (std::vector<std::vector<int>>{
                       {0, -1, -1, 0}, {1, -1, 0, 0}, {-1, 0, 0, -1}, {0, 0, 1, -1}}));
  EXPECT_EQ(map_bits_to_gsm_block("", {4, 2}), std::vector<std::vector<int>>(4));
  EXPECT_THROW(map_bits_to_gsm_block("010", {4, 2}), ShapeError);
  EXPECT_THROW(map_bits_to_gsm_block("0102", {4, 2}), ParseError);
  EXPECT_THROW(map_bits_to_gsm_block("0101", {4, 2, 4}), ShapeError);
}
