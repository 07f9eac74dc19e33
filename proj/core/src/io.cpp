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

#include "eczcs/io.hpp"

#include <fstream>
#include <sstream>

#include "eczcs/error.hpp"
#include "json.hpp"

namespace eczcs {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Family parse_family_text(std::string_view text) {
  int q = 2;
  bool saw_data = false;
  std::vector<std::vector<std::string>> raw_sets;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      raw_sets.emplace_back();
      saw_data = true;
      continue;
    }
    if (line.size() > 2 && line[0] == 'q' && (line[1] == ' ' || line[1] == '\t')) {
      if (saw_data) throw ParseError("line " + std::to_string(line_no) + ": q must precede the sets");
      try {
        q = std::stoi(std::string(trim(line.substr(1))));
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad alphabet size");
      }
      continue;
    }
    if (raw_sets.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": sequence before any [set] header");
    }
    raw_sets.back().emplace_back(line);
  }
  if (raw_sets.empty()) throw ParseError("no sets in family text");

  std::vector<SequenceSet> sets;
  for (const auto& raw : raw_sets) {
    if (raw.empty()) throw ParseError("empty set in family text");
    std::vector<PhaseSequence> members;
    for (const auto& line : raw) members.push_back(parse_sequence(line, q));
    try {
      sets.emplace_back(std::move(members));
    } catch (const ShapeError& e) {
      throw ParseError(e.what());
    }
  }
  try {
    return Family(std::move(sets));
  } catch (const ShapeError& e) {
    throw ParseError(e.what());
  }
}

std::string format_family_text(const Family& family, std::string_view title) {
  std::ostringstream out;
  if (!title.empty()) out << "# " << title << '\n';
  out << "q " << family.q() << '\n';
  for (std::size_t m = 0; m < family.set_count(); ++m) {
    out << "[G" << m << "]\n";
    for (const auto& s : family[m]) out << format_sequence(s) << '\n';
  }
  return out.str();
}

Family family_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const int q = doc.at("q").get<int>();
    std::vector<SequenceSet> sets;
    for (const auto& jset : doc.at("sets")) {
      std::vector<PhaseSequence> members;
      for (const auto& jseq : jset) {
        members.emplace_back(q, jseq.get<std::vector<int>>());
      }
      sets.emplace_back(std::move(members));
    }
    Family family(std::move(sets));
    auto expect = [&](const char* key, std::size_t actual) {
      if (doc.contains(key) && doc[key].get<std::size_t>() != actual) {
        throw ParseError(std::string("declared ") + key + " disagrees with data");
      }
    };
    expect("M", family.set_count());
    expect("N", family.set_size());
    expect("L", family.length());
    return family;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad family JSON: ") + e.what());
  } catch (const ShapeError& e) {
    throw ParseError(e.what());
  }
}

std::string family_to_json(const Family& family) {
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& set : family) {
    nlohmann::json jset = nlohmann::json::array();
    for (const auto& s : set) {
      jset.push_back(std::vector<int>(s.phases().begin(), s.phases().end()));
    }
    sets.push_back(std::move(jset));
  }
  nlohmann::json doc = {{"q", family.q()},
                        {"M", family.set_count()},
                        {"N", family.set_size()},
                        {"L", family.length()},
                        {"sets", std::move(sets)}};
  return doc.dump();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Family load_family(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return family_from_json(text);
  return parse_family_text(text);
}

}  // namespace eczcs
