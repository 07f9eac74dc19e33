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

#include <filesystem>
#include <fstream>
#include <random>

#include "eczcs/error.hpp"
#include "eczcs/io.hpp"
#include "support.hpp"

using namespace eczcs;

TEST(FamilyText, FixturesHaveDeclaredShapes) {
  const auto t3 = testing_support::fixture("table3");
  EXPECT_EQ(t3.set_count(), 2u);
  EXPECT_EQ(t3.set_size(), 2u);
  EXPECT_EQ(t3.length(), 12u);
  const auto t5 = testing_support::fixture("table5");
  EXPECT_EQ(t5.set_count(), 4u);
  EXPECT_EQ(t5.set_size(), 2u);
  EXPECT_EQ(t5.length(), 32u);
  EXPECT_EQ(t5.q(), 2);
}

TEST(FamilyText, RoundTrip) {
  const auto text = read_text_file(std::filesystem::path(ECZCS_FIXTURE_DIR) / "table4.txt");
  const auto family = parse_family_text(text);
  EXPECT_EQ(format_family_text(family, "binary (2,2,24,9)-E-CZCS"), text);
  EXPECT_EQ(parse_family_text(format_family_text(family)), family);
}

TEST(FamilyText, NonBinary) {
  const auto f = parse_family_text("q 4\n[A]\n0,1,2\n3,3,3\n");
  EXPECT_EQ(f.q(), 4);
  EXPECT_EQ(f[0][1][2], 3);
  EXPECT_EQ(parse_family_text(format_family_text(f)), f);
}

TEST(FamilyText, Errors) {
  EXPECT_THROW(parse_family_text(""), ParseError);
  EXPECT_THROW(parse_family_text("++\n"), ParseError);
  EXPECT_THROW(parse_family_text("[G0]\n"), ParseError);
  EXPECT_THROW(parse_family_text("[G0]\n++\n+\n"), ParseError);
  EXPECT_THROW(parse_family_text("[G0]\n++\n[G1]\n+++\n"), ParseError);
  EXPECT_THROW(parse_family_text("[G0]\n+a\n"), ParseError);
  EXPECT_THROW(parse_family_text("[G0]\n++\nq 4\n"), ParseError);
  EXPECT_THROW(parse_family_text("q x\n[G0]\n++\n"), ParseError);
}

TEST(FamilyJson, RoundTripRandom) {
  std::mt19937_64 rng(3);
  for (int q : {2, 4, 6}) {
    const auto f = testing_support::random_family(rng, q, 3, 2, 7);
    EXPECT_EQ(family_from_json(family_to_json(f)), f);
  }
}

TEST(FamilyJson, SchemaChecks) {
  EXPECT_NO_THROW(family_from_json(R"({"q":2,"sets":[[[0,1],[1,1]]]})"));
  EXPECT_THROW(family_from_json(R"({"q":2,"M":2,"sets":[[[0,1],[1,1]]]})"), ParseError);
  EXPECT_THROW(family_from_json(R"({"q":2,"L":3,"sets":[[[0,1]]]})"), ParseError);
  EXPECT_THROW(family_from_json(R"({"q":2,"sets":[[[0,2]]]})"), ParseError);
  EXPECT_THROW(family_from_json(R"({"sets":[[[0]]]})"), ParseError);
  EXPECT_THROW(family_from_json("{"), ParseError);
}

TEST(LoadFamily, DetectsFormat) {
  const auto dir = std::filesystem::temp_directory_path() / "eczcs_io_test";
  std::filesystem::create_directories(dir);
  const auto t3 = testing_support::fixture("table3");
  {
    std::ofstream(dir / "f.json") << family_to_json(t3);
  }
  EXPECT_EQ(load_family(dir / "f.json"), t3);
  EXPECT_THROW(load_family(dir / "missing.txt"), Error);
  std::filesystem::remove_all(dir);
}
