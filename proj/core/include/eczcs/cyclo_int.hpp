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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace eczcs {

/// Coefficients of the n-th cyclotomic polynomial Phi_n(x), lowest degree
/// first. Computed once per n by dividing x^n - 1 by Phi_d for every proper
/// divisor d of n, then cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

/// An element of Z[xi_q] written as sum_j counts[j] * xi_q^j.
///
/// The representation is not unique (sum_j xi_q^j = 0 for q > 1, and
/// xi_q^{j+q/2} = -xi_q^j), so equality and the zero test reduce the count
/// polynomial modulo Phi_q(x) exactly.
class CycloInt {
 public:
  explicit CycloInt(int q);

  /// multiplicity * xi_q^exponent; the exponent is reduced mod q.
  static CycloInt root_power(int q, int exponent, std::int64_t multiplicity = 1);

  int q() const noexcept { return q_; }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }

  void add_root(int exponent, std::int64_t multiplicity = 1);

  /// Adds xi_q^(a - b) for a, b already reduced into [0, q).
  void add_difference(int a, int b) noexcept {
    const int d = a - b;
    ++counts_[static_cast<std::size_t>(d < 0 ? d + q_ : d)];
  }

  CycloInt& operator+=(const CycloInt& other);
  CycloInt& operator-=(const CycloInt& other);
  friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
  CycloInt operator-() const;

  CycloInt conj() const;

  /// True iff the value is exactly zero.
  bool is_zero() const;

  /// Value equality (not representation equality).
  friend bool operator==(const CycloInt& a, const CycloInt& b) { return (a - b).is_zero(); }

  std::complex<double> to_complex() const;
  double magnitude() const { return std::abs(to_complex()); }

  /// |value|^2 as an exact integer; available for q in {2, 4} where the
  /// value is a Gaussian integer.
  std::optional<std::int64_t> exact_norm() const;

  /// Integer value when the element is a rational integer (e.g. a peak).
  std::optional<std::int64_t> as_integer() const;

 private:
  int q_;
  std::vector<std::int64_t> counts_;
};

}  // namespace eczcs
