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

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace eczcs::cli {

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view data);

/// Everything needed to re-run a command: the command line words, every
/// resolved parameter, the tool version, the master seed and a digest per
/// input file.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> inputs;  // path -> hex digest

  void add_input(const std::filesystem::path& path, std::string_view contents);
  std::string to_json() const;
};

}  // namespace eczcs::cli
