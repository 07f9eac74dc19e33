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

#include "eczcs/sequence.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "eczcs/error.hpp"

namespace eczcs {

PhaseSequence::PhaseSequence(int q, std::vector<int> phases)
    : q_(q), phases_(std::move(phases)) {
  if (q_ < 2 || q_ % 2 != 0) {
    throw ShapeError("alphabet size q must be an even integer >= 2, got " +
                     std::to_string(q_));
  }
  if (phases_.empty()) throw ShapeError("sequence length must be at least 1");
  for (int p : phases_) {
    if (p < 0 || p >= q_) {
      throw ShapeError("phase " + std::to_string(p) + " outside Z_" +
                       std::to_string(q_));
    }
  }
}

ComplexSample unit_root(int q, int p) {
  // Exact values on the axes keep binary and quaternary images free of
  // rounding noise.
  const int quarter = 4 * p;
  if (quarter % q == 0) {
    static constexpr ComplexSample kAxis[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return kAxis[quarter / q];
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * p / q);
}

std::vector<ComplexSample> modulate(const PhaseSequence& s) {
  std::vector<ComplexSample> out;
  out.reserve(s.length());
  for (int p : s.phases()) out.push_back(unit_root(s.q(), p));
  return out;
}

PhaseSequence negate(const PhaseSequence& s) {
  std::vector<int> phases(s.phases().begin(), s.phases().end());
  const int half = s.q() / 2;
  for (int& p : phases) p = (p + half) % s.q();
  return PhaseSequence(s.q(), std::move(phases));
}

PhaseSequence concat(const PhaseSequence& a, const PhaseSequence& b) {
  if (a.q() != b.q()) {
    throw ShapeError("cannot concatenate sequences over Z_" +
                     std::to_string(a.q()) + " and Z_" + std::to_string(b.q()));
  }
  std::vector<int> phases(a.phases().begin(), a.phases().end());
  phases.insert(phases.end(), b.phases().begin(), b.phases().end());
  return PhaseSequence(a.q(), std::move(phases));
}

PhaseSequence cyclic_shift(const PhaseSequence& s, std::size_t shift) {
  const std::size_t n = s.length();
  std::vector<int> phases(n);
  for (std::size_t t = 0; t < n; ++t) phases[(t + shift) % n] = s[t];
  return PhaseSequence(s.q(), std::move(phases));
}

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";  // U+2212

bool is_ignorable(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')';
}

}  // namespace

PhaseSequence parse_sequence(std::string_view text, int q) {
  std::vector<int> phases;
  if (q == 2) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (is_ignorable(c)) continue;
      if (c == '+') {
        phases.push_back(0);
      } else if (c == '-') {
        phases.push_back(1);
      } else if (text.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
        phases.push_back(1);
        i += kUnicodeMinus.size() - 1;
      } else {
        throw ParseError(std::string("illegal glyph '") + c +
                         "' in binary sequence");
      }
    }
  } else {
    std::string token;
    auto flush = [&] {
      if (token.empty()) throw ParseError("empty phase in sequence text");
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw ParseError("illegal phase '" + token + "'");
      }
      if (used != token.size()) throw ParseError("illegal phase '" + token + "'");
      if (value < 0 || value >= q) {
        throw ParseError("phase " + token + " outside Z_" + std::to_string(q));
      }
      phases.push_back(value);
      token.clear();
    };
    bool any = false;
    for (char c : text) {
      if (is_ignorable(c)) continue;
      any = true;
      if (c == ',') {
        flush();
      } else {
        token.push_back(c);
      }
    }
    if (any) flush();
  }
  if (phases.empty()) throw ParseError("empty sequence");
  try {
    return PhaseSequence(q, std::move(phases));
  } catch (const ShapeError& e) {
    throw ParseError(e.what());
  }
}

std::string format_sequence(const PhaseSequence& s) {
  std::string out;
  if (s.q() == 2) {
    out.reserve(s.length());
    for (int p : s.phases()) out.push_back(p == 0 ? '+' : '-');
    return out;
  }
  for (std::size_t t = 0; t < s.length(); ++t) {
    if (t) out.push_back(',');
    out += std::to_string(s[t]);
  }
  return out;
}

SequenceSet::SequenceSet(std::vector<PhaseSequence> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw ShapeError("a sequence set needs at least one member");
  for (const auto& s : members_) {
    if (s.length() != members_.front().length() || s.q() != members_.front().q()) {
      throw ShapeError("set members must share length and alphabet");
    }
  }
}

Family::Family(std::vector<SequenceSet> sets) : sets_(std::move(sets)) {
  if (sets_.empty()) throw ShapeError("a family needs at least one set");
  const auto& first = sets_.front();
  for (const auto& set : sets_) {
    if (set.size() != first.size() || set.length() != first.length() ||
        set.q() != first.q()) {
      throw ShapeError("family sets must share (N, L, q)");
    }
  }
}

Family leading_sets(const Family& family, std::size_t count) {
  if (count == 0 || count > family.set_count()) {
    throw ShapeError("cannot take " + std::to_string(count) + " sets of a family with " +
                     std::to_string(family.set_count()));
  }
  return Family(std::vector<SequenceSet>(family.sets().begin(),
                                         family.sets().begin() + count));
}

}  // namespace eczcs
