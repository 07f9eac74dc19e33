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

#include "manifest.hpp"

#include <cstdio>

#include "json.hpp"

#ifndef ECZCS_VERSION_STRING
#define ECZCS_VERSION_STRING "unknown"
#endif

namespace eczcs::cli {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void RunManifest::add_input(const std::filesystem::path& path, std::string_view contents) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(fnv1a64(contents)));
  inputs[path.string()] = buf;
}

std::string RunManifest::to_json() const {
  nlohmann::json doc = {{"command", command},
                        {"parameters", parameters},
                        {"version", ECZCS_VERSION_STRING},
                        {"seed", seed},
                        {"inputs", inputs}};
  return doc.dump(2);
}

}  // namespace eczcs::cli
