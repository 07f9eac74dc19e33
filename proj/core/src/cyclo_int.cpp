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

#include "eczcs/cyclo_int.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "eczcs/error.hpp"

namespace eczcs {

namespace {

using Poly = std::vector<std::int64_t>;

// Quotient of num / den for a monic den; num must be divisible.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

Poly compute_cyclotomic(int n) {
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  if (n < 1) throw ShapeError("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<int, Poly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Poly p = compute_cyclotomic(n);
  std::lock_guard lock(mu);
  // std::map never invalidates references on insert.
  return cache.try_emplace(n, std::move(p)).first->second;
}

CycloInt::CycloInt(int q) : q_(q), counts_(static_cast<std::size_t>(q), 0) {
  if (q < 1) throw ShapeError("CycloInt needs q >= 1");
}

CycloInt CycloInt::root_power(int q, int exponent, std::int64_t multiplicity) {
  CycloInt z(q);
  z.add_root(exponent, multiplicity);
  return z;
}

void CycloInt::add_root(int exponent, std::int64_t multiplicity) {
  int e = exponent % q_;
  if (e < 0) e += q_;
  counts_[static_cast<std::size_t>(e)] += multiplicity;
}

CycloInt& CycloInt::operator+=(const CycloInt& other) {
  if (other.q_ != q_) throw ShapeError("CycloInt alphabets differ");
  for (std::size_t j = 0; j < counts_.size(); ++j) counts_[j] += other.counts_[j];
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& other) {
  if (other.q_ != q_) throw ShapeError("CycloInt alphabets differ");
  for (std::size_t j = 0; j < counts_.size(); ++j) counts_[j] -= other.counts_[j];
  return *this;
}

CycloInt CycloInt::operator-() const {
  CycloInt z(q_);
  for (std::size_t j = 0; j < counts_.size(); ++j) z.counts_[j] = -counts_[j];
  return z;
}

CycloInt CycloInt::conj() const {
  CycloInt z(q_);
  const std::size_t q = counts_.size();
  for (std::size_t j = 0; j < q; ++j) z.counts_[(q - j) % q] = counts_[j];
  return z;
}

bool CycloInt::is_zero() const {
  const auto& c = counts_;
  switch (q_) {
    case 1:
      return c[0] == 0;
    case 2:
      return c[0] == c[1];
    case 4:
      return c[0] == c[2] && c[1] == c[3];
    default:
      break;
  }
  thread_local int cached_q = 0;
  thread_local const Poly* cached_phi = nullptr;
  if (cached_q != q_) {
    cached_phi = &cyclotomic_polynomial(q_);
    cached_q = q_;
  }
  const Poly& phi = *cached_phi;
  const std::size_t deg = phi.size() - 1;
  Poly r(counts_.begin(), counts_.end());
  for (std::size_t i = r.size(); i-- > deg;) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
  }
  for (std::size_t i = 0; i < deg && i < r.size(); ++i) {
    if (r[i] != 0) return false;
  }
  return true;
}

std::complex<double> CycloInt::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  const double step = 2.0 * std::numbers::pi / q_;
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    if (counts_[j] != 0) {
      acc += static_cast<double>(counts_[j]) * std::polar(1.0, step * static_cast<double>(j));
    }
  }
  return acc;
}

std::optional<std::int64_t> CycloInt::exact_norm() const {
  if (q_ == 2) {
    const std::int64_t re = counts_[0] - counts_[1];
    return re * re;
  }
  if (q_ == 4) {
    const std::int64_t re = counts_[0] - counts_[2];
    const std::int64_t im = counts_[1] - counts_[3];
    return re * re + im * im;
  }
  return std::nullopt;
}

std::optional<std::int64_t> CycloInt::as_integer() const {
  // The value is rational iff subtracting its real part leaves zero; for
  // the alphabets used here the real part of an integer is exact.
  const auto value = to_complex();
  const auto rounded = static_cast<std::int64_t>(std::llround(value.real()));
  CycloInt diff = *this;
  diff.add_root(0, -rounded);
  if (diff.is_zero()) return rounded;
  return std::nullopt;
}

}  // namespace eczcs
