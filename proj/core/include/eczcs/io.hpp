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
#include <string>
#include <string_view>

#include "eczcs/sequence.hpp"

namespace eczcs {

// Text fixture format:
//
//   # free-form comment
//   q 2
//   [G0]
//   ++++--+-+-++
//   -++--+++++-+
//   [G1]
//   ...
//
// Each bracketed header opens a new set; every following non-empty line is a
// member sequence in parse_sequence form. The q line is optional and
// defaults to 2.
Family parse_family_text(std::string_view text);
std::string format_family_text(const Family& family, std::string_view title = {});

// JSON schema: {"q": 2, "M": 2, "N": 2, "L": 12, "sets": [[[0,1,...],...],...]}.
// M, N and L are optional on input but must agree with the data when given.
Family family_from_json(std::string_view json_text);
std::string family_to_json(const Family& family);

/// Reads a family from disk, choosing JSON when the content starts with '{'.
Family load_family(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace eczcs
