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

#include "eczcs/verify.hpp"

#include <algorithm>
#include <cstdlib>

#include "eczcs/correlation.hpp"
#include "eczcs/error.hpp"
#include "json.hpp"

namespace eczcs {

namespace {

void require_zone(std::size_t zone, std::size_t length) {
  if (zone > length) {
    throw ShapeError("zone width " + std::to_string(zone) + " exceeds length " +
                     std::to_string(length));
  }
}

// Full-range set sums and cross-channel sums for every ordered pair, with
// the zero test and magnitude cached per shift.
class PairTables {
 public:
  explicit PairTables(const Family& family)
      : m_(family.set_count()), l_(static_cast<int>(family.length())) {
    const std::size_t span = 2 * static_cast<std::size_t>(l_) - 1;
    set_zero_.resize(m_ * m_ * span);
    set_mag_.resize(m_ * m_ * span);
    cross_zero_.resize(m_ * m_ * span);
    cross_mag_.resize(m_ * m_ * span);
    for (std::size_t a = 0; a < m_; ++a) {
      for (std::size_t b = 0; b < m_; ++b) {
        for (int u = -l_ + 1; u < l_; ++u) {
          const std::size_t i = index(a, b, u);
          const CycloInt s = set_corr_sum(family[a], family[b], u);
          set_zero_[i] = s.is_zero();
          set_mag_[i] = set_zero_[i] ? 0.0 : magnitude(s);
          const CycloInt c = cross_channel_sum(family[a], family[b], u);
          cross_zero_[i] = c.is_zero();
          cross_mag_[i] = cross_zero_[i] ? 0.0 : magnitude(c);
        }
      }
    }
  }

  std::size_t sets() const { return m_; }
  int length() const { return l_; }

  // Adds a violation for each sign of |u| = shift where the sum is non-zero.
  void check_set_sum(Verdict& v, const char* id, std::size_t a, std::size_t b,
                     int shift) const {
    check(v, id, set_zero_, set_mag_, a, b, shift);
  }
  void check_cross(Verdict& v, const char* id, std::size_t a, std::size_t b,
                   int shift) const {
    check(v, id, cross_zero_, cross_mag_, a, b, shift);
  }

 private:
  std::size_t index(std::size_t a, std::size_t b, int u) const {
    const std::size_t span = 2 * static_cast<std::size_t>(l_) - 1;
    return (a * m_ + b) * span + static_cast<std::size_t>(u + l_ - 1);
  }

  void check(Verdict& v, const char* id, const std::vector<bool>& zero,
             const std::vector<double>& mag, std::size_t a, std::size_t b,
             int shift) const {
    if (shift >= l_) return;
    const int signs[2] = {shift, -shift};
    for (int k = 0; k < (shift == 0 ? 1 : 2); ++k) {
      const std::size_t i = index(a, b, signs[k]);
      if (!zero[i]) v.violations.push_back({id, a, b, signs[k], mag[i]});
    }
  }

  std::size_t m_;
  int l_;
  std::vector<bool> set_zero_;
  std::vector<double> set_mag_;
  std::vector<bool> cross_zero_;
  std::vector<double> cross_mag_;
};

// Shifts |u| in T1 u T2 (both restricted to [0, L-1]).
std::vector<int> zone_windows(int length, int zone) {
  std::vector<int> out;
  for (int u = 0; u < length; ++u) {
    const bool front = u >= 1 && u <= zone;
    const bool tail = u >= length - zone;
    if (front || tail) out.push_back(u);
  }
  return out;
}

Verdict c1_violations(const PairTables& t, int zone, const char* same_id,
                      const char* cross_id) {
  Verdict v;
  const int l = t.length();
  const auto windows = zone_windows(l, zone);
  for (std::size_t a = 0; a < t.sets(); ++a) {
    for (std::size_t b = 0; b < t.sets(); ++b) {
      if (a == b) {
        for (int u : windows) {
          if (u != 0) t.check_set_sum(v, same_id, a, b, u);
        }
      } else {
        t.check_set_sum(v, cross_id, a, b, 0);
        for (int u : windows) {
          if (u != 0) t.check_set_sum(v, cross_id, a, b, u);
        }
      }
    }
  }
  return v;
}

Verdict eczcs_violations(const PairTables& t, int zone) {
  Verdict v = c1_violations(t, zone, "C1-auto", "C1-cross");
  const int l = t.length();
  for (std::size_t a = 0; a < t.sets(); ++a) {
    for (std::size_t b = 0; b < t.sets(); ++b) {
      for (int u = std::max(0, l - zone); u < l; ++u) t.check_cross(v, "C2", a, b, u);
    }
  }
  return v;
}

}  // namespace

FamilyParams params_of(const Family& family, std::size_t zone) {
  return {family.set_count(), family.set_size(), family.length(), zone, family.q()};
}

void Verdict::merge(const Verdict& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string verdict_to_json(const Verdict& verdict) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& v : verdict.violations) {
    list.push_back({{"check", v.check},
                    {"first", v.first},
                    {"second", v.second},
                    {"u", v.shift},
                    {"magnitude", v.magnitude}});
  }
  nlohmann::json doc = {{"passed", verdict.passed()}, {"violations", std::move(list)}};
  return doc.dump();
}

Verdict check_zcz_set(const SequenceSet& set, std::size_t zone) {
  const int l = static_cast<int>(set.length());
  const int reach = std::min(static_cast<int>(zone), l - 1);
  Verdict v;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      for (int u = -reach; u <= reach; ++u) {
        if (i == j && u == 0) continue;
        const CycloInt value = pccf(set[i], set[j], u);
        if (!value.is_zero()) {
          v.violations.push_back({i == j ? "zcz-auto" : "zcz-cross", i, j, u, magnitude(value)});
        }
      }
    }
  }
  return v;
}

std::size_t tang_fan_matsufuji_bound(std::size_t n, std::size_t length, int q) {
  if (n == 0) throw ShapeError("set size must be positive");
  if (q == 2) return length / (2 * n);
  const std::size_t ratio = length / n;
  return ratio == 0 ? 0 : ratio - 1;
}

Verdict check_zccs(const Family& family, std::size_t zone) {
  require_zone(zone, family.length());
  const int l = static_cast<int>(family.length());
  const int z = static_cast<int>(zone);
  const auto peak = static_cast<std::int64_t>(family.set_size() * family.length());
  Verdict v;
  for (std::size_t a = 0; a < family.set_count(); ++a) {
    for (std::size_t b = 0; b < family.set_count(); ++b) {
      for (int u = -l + 1; u < l; ++u) {
        const int mag = std::abs(u);
        if (a == b && u == 0) {
          const CycloInt value = set_corr_sum(family[a], family[b], 0);
          if (value.as_integer() != peak) {
            v.violations.push_back({"zccs-peak", a, b, 0, magnitude(value)});
          }
          continue;
        }
        if (mag >= z) continue;
        const CycloInt value = set_corr_sum(family[a], family[b], u);
        if (!value.is_zero()) {
          v.violations.push_back({a == b ? "zccs-auto" : "zccs-cross", a, b, u, magnitude(value)});
        }
      }
    }
  }
  return v;
}

Verdict check_mocs(const Family& family) { return check_zccs(family, family.length()); }

Verdict check_ccc(const Family& family) {
  Verdict v = check_mocs(family);
  if (family.set_count() != family.set_size()) {
    v.violations.push_back({"ccc-size", family.set_count(), family.set_size(), 0, 0.0});
  }
  return v;
}

Verdict check_szccs(const Family& family, std::size_t zone) {
  require_zone(zone, family.length());
  return c1_violations(PairTables(family), static_cast<int>(zone), "szccs-auto", "szccs-cross");
}

Verdict check_eczcs(const Family& family, std::size_t zone) {
  require_zone(zone, family.length());
  return eczcs_violations(PairTables(family), static_cast<int>(zone));
}

std::optional<std::size_t> measure_zcz_width(const Family& family) {
  const PairTables tables(family);
  for (int z = static_cast<int>(family.length()); z >= 0; --z) {
    if (eczcs_violations(tables, z).passed()) return static_cast<std::size_t>(z);
  }
  return std::nullopt;
}

std::size_t eczcs_bound(std::size_t m, std::size_t n, std::size_t length, int q) {
  if (m == 0) throw ShapeError("set count must be positive");
  if (q == 2) return n * length / (2 * m);
  const std::size_t ratio = n * length / m;
  return ratio == 0 ? 0 : ratio - 1;
}

bool is_optimal(const Family& family, std::size_t zone) {
  const std::size_t nl = family.set_size() * family.length();
  const std::size_t m = family.set_count();
  bool meets = false;
  if (family.q() == 2) {
    meets = nl % (2 * m) == 0 && zone == nl / (2 * m);
  } else {
    meets = nl % m == 0 && nl / m >= 1 && zone == nl / m - 1;
  }
  return meets && zone <= family.length() && check_eczcs(family, zone).passed();
}

SequenceSet flatten_to_zcz(const Family& family) {
  std::vector<PhaseSequence> rows;
  for (const auto& set : family) {
    PhaseSequence d = set[0];
    for (std::size_t n = 1; n < set.size(); ++n) d = concat(d, set[n]);
    rows.push_back(std::move(d));
  }
  return SequenceSet(std::move(rows));
}

}  // namespace eczcs
