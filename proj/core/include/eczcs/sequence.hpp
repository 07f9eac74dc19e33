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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eczcs {

using ComplexSample = std::complex<double>;

/// A unimodular sequence over the q-th roots of unity, stored as exponents
/// in Z_q. Element t represents exp(2*pi*i*phases[t]/q).
///
/// Invariants: q is even and >= 2, the sequence is non-empty, and every
/// phase lies in [0, q). Violations throw ShapeError at construction.
class PhaseSequence {
 public:
  PhaseSequence(int q, std::vector<int> phases);

  int q() const noexcept { return q_; }
  std::size_t length() const noexcept { return phases_.size(); }
  std::span<const int> phases() const noexcept { return phases_; }
  int operator[](std::size_t t) const { return phases_[t]; }

  friend bool operator==(const PhaseSequence&, const PhaseSequence&) = default;

 private:
  int q_;
  std::vector<int> phases_;
};

/// exp(2*pi*i*p/q) for p in [0, q).
ComplexSample unit_root(int q, int p);

/// Floating-point image of the sequence: cos(2*pi*p/q) + i sin(2*pi*p/q).
std::vector<ComplexSample> modulate(const PhaseSequence& s);

/// Elementwise negation, realised as a shift of every phase by q/2.
PhaseSequence negate(const PhaseSequence& s);

/// a || b. Both operands must share q.
PhaseSequence concat(const PhaseSequence& a, const PhaseSequence& b);

/// Cyclic shift to the right by `shift` positions.
PhaseSequence cyclic_shift(const PhaseSequence& s, std::size_t shift);

/// Parses a sequence. For q == 2 the '+'/'-' glyph form is expected (the
/// Unicode minus sign is accepted as well); for larger q, comma separated
/// integers in [0, q). Surrounding whitespace and parentheses are ignored.
PhaseSequence parse_sequence(std::string_view text, int q);

/// Inverse of parse_sequence: '+'/'-' glyphs for q == 2, otherwise a
/// comma separated list of phases.
std::string format_sequence(const PhaseSequence& s);

/// N sequences of a common length and alphabet.
class SequenceSet {
 public:
  explicit SequenceSet(std::vector<PhaseSequence> members);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t length() const noexcept { return members_.front().length(); }
  int q() const noexcept { return members_.front().q(); }
  const PhaseSequence& operator[](std::size_t n) const { return members_[n]; }
  std::span<const PhaseSequence> members() const noexcept { return members_; }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const SequenceSet&, const SequenceSet&) = default;

 private:
  std::vector<PhaseSequence> members_;
};

/// M sequence sets sharing (N, L, q). Index order: family[m][n] is the
/// n-th constituent sequence of the m-th set.
class Family {
 public:
  explicit Family(std::vector<SequenceSet> sets);

  std::size_t set_count() const noexcept { return sets_.size(); }       // M
  std::size_t set_size() const noexcept { return sets_.front().size(); }  // N
  std::size_t length() const noexcept { return sets_.front().length(); }  // L
  int q() const noexcept { return sets_.front().q(); }

  const SequenceSet& operator[](std::size_t m) const { return sets_[m]; }
  std::span<const SequenceSet> sets() const noexcept { return sets_; }

  auto begin() const noexcept { return sets_.begin(); }
  auto end() const noexcept { return sets_.end(); }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  std::vector<SequenceSet> sets_;
};

/// Keeps the first `count` sets of a family.
Family leading_sets(const Family& family, std::size_t count);

}  // namespace eczcs
