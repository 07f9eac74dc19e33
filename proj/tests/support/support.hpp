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

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "eczcs/io.hpp"
#include "eczcs/sequence.hpp"
#include "oracle.hpp"

namespace testing_support {

inline eczcs::Family fixture(const std::string& name) {
  return eczcs::load_family(std::filesystem::path(ECZCS_FIXTURE_DIR) / (name + ".txt"));
}

inline eczcs::PhaseSequence random_sequence(std::mt19937_64& rng, int q, std::size_t length) {
  std::uniform_int_distribution<int> pick(0, q - 1);
  std::vector<int> phases(length);
  for (int& p : phases) p = pick(rng);
  return eczcs::PhaseSequence(q, std::move(phases));
}

inline eczcs::Family random_family(std::mt19937_64& rng, int q, std::size_t m, std::size_t n,
                                   std::size_t length) {
  std::vector<eczcs::SequenceSet> sets;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<eczcs::PhaseSequence> members;
    for (std::size_t j = 0; j < n; ++j) members.push_back(random_sequence(rng, q, length));
    sets.emplace_back(std::move(members));
  }
  return eczcs::Family(std::move(sets));
}

inline oracle::cvec image(const eczcs::PhaseSequence& s) {
  return oracle::image(s.q(), std::vector<int>(s.phases().begin(), s.phases().end()));
}

inline std::vector<oracle::cvec> image(const eczcs::SequenceSet& set) {
  std::vector<oracle::cvec> out;
  for (const auto& s : set) out.push_back(image(s));
  return out;
}

}  // namespace testing_support
