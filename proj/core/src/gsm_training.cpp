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

#include "eczcs/gsm_training.hpp"

#include <cstdio>
#include <algorithm>

#include "eczcs/correlation.hpp"
#include "eczcs/error.hpp"
#include "json.hpp"

namespace eczcs {

namespace {

std::size_t binomial(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

std::size_t rows_in_block(const TrainingMatrix& psi, std::size_t block) {
  const auto na = static_cast<std::size_t>(psi.config().na);
  const std::size_t start = block * na;
  return psi.rows() > start ? std::min(na, psi.rows() - start) : 0;
}

std::string format_entry(int q, int phase) {
  if (phase == TrainingMatrix::kSilent) return "0";
  if (q == 2) return phase == 0 ? "1" : "-1";
  const ComplexSample z = unit_root(q, phase);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

}  // namespace

void validate_gsm_config(const GsmConfig& cfg) {
  if (cfg.nt < 1) throw ShapeError("Nt must be at least 1");
  if (cfg.na < 1 || cfg.na > cfg.nt) throw ShapeError("Na must satisfy 1 <= Na <= Nt");
  if (cfg.modulation_order < 2) throw ShapeError("modulation order must be at least 2");
}

TrainingMatrix::TrainingMatrix(int q, GsmConfig cfg, std::size_t set_size, std::size_t length,
                               std::vector<std::vector<int>> rows, std::string source_id)
    : q_(q), cfg_(cfg), n_(set_size), l_(length), rows_(std::move(rows)), source_(std::move(source_id)) {
  validate_gsm_config(cfg_);
  if (q_ < 2 || q_ % 2 != 0) throw ShapeError("q must be even and >= 2");
  if (rows_.size() != static_cast<std::size_t>(cfg_.nt)) throw ShapeError("training matrix needs Nt rows");
  const std::size_t width = n_ * static_cast<std::size_t>(cfg_.blocks()) * l_;
  if (width == 0) throw ShapeError("training matrix is empty");
  for (const auto& r : rows_) {
    if (r.size() != width) throw ShapeError("training rows must have length N*V*L");
    for (int e : r) {
      if (e != kSilent && (e < 0 || e >= q_)) throw ShapeError("training entry outside Z_q");
    }
  }
}

void TrainingMatrix::set_entry(std::size_t r, std::size_t c, int value) {
  if (value != kSilent && (value < 0 || value >= q_)) throw ShapeError("training entry outside Z_q");
  rows_.at(r).at(c) = value;
}

TrainingMatrix build_training_matrix(const Family& family, const GsmConfig& cfg,
                                     std::string source_id) {
  validate_gsm_config(cfg);
  if (family.set_count() < static_cast<std::size_t>(cfg.na)) {
    throw ShapeError("family has M=" + std::to_string(family.set_count()) +
                     " sets, fewer than Na=" + std::to_string(cfg.na));
  }
  const std::size_t v_count = static_cast<std::size_t>(cfg.blocks());
  const std::size_t n = family.set_size();
  const std::size_t l = family.length();
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < static_cast<std::size_t>(cfg.nt); ++r) {
    const std::size_t block = r / static_cast<std::size_t>(cfg.na);
    const std::size_t set = r % static_cast<std::size_t>(cfg.na);
    std::vector<int> row(n * v_count * l, TrainingMatrix::kSilent);
    for (std::size_t j = 0; j < n; ++j) {
      const auto phases = family[set][j].phases();
      std::copy(phases.begin(), phases.end(), row.begin() + static_cast<std::ptrdiff_t>((j * v_count + block) * l));
    }
    rows.push_back(std::move(row));
  }
  return TrainingMatrix(family.q(), cfg, n, l, std::move(rows), std::move(source_id));
}

CycloInt training_pccf(const TrainingMatrix& psi, std::size_t i, std::size_t j, int u) {
  const auto len = static_cast<long long>(psi.cols());
  const int q = psi.q();
  CycloInt out(q);
  const auto& a = psi.row(i);
  const auto& b = psi.row(j);
  const long long shift = ((u % len) + len) % len;
  for (long long t = 0; t < len; ++t) {
    const int x = a[static_cast<std::size_t>((t + shift) % len)];
    const int y = b[static_cast<std::size_t>(t)];
    if (x == TrainingMatrix::kSilent || y == TrainingMatrix::kSilent) continue;
    out.add_root(x - y + q);
  }
  return out;
}

std::size_t training_block(const TrainingMatrix& psi, std::size_t r) {
  return r / static_cast<std::size_t>(psi.config().na);
}

Verdict check_design_criterion(const TrainingMatrix& psi, int lambda) {
  if (lambda < 0 || static_cast<std::size_t>(lambda) >= psi.cols()) {
    throw ShapeError("delay spread must satisfy 0 <= lambda < L'");
  }
  Verdict v;
  const std::size_t l = psi.sub_length();
  const auto v_count = static_cast<std::size_t>(psi.config().blocks());
  for (std::size_t c = 0; c < psi.cols(); ++c) {
    std::size_t count = 0;
    for (std::size_t r = 0; r < psi.rows(); ++r) count += psi.at(r, c) != TrainingMatrix::kSilent;
    const std::size_t expected = rows_in_block(psi, (c / l) % v_count);
    if (count != expected) {
      v.violations.push_back({"sparsity", c, count, 0, static_cast<double>(expected)});
    }
  }
  const auto energy = static_cast<std::int64_t>(psi.energy());
  for (std::size_t i = 0; i < psi.rows(); ++i) {
    for (std::size_t j = 0; j < psi.rows(); ++j) {
      const std::size_t a = training_block(psi, i);
      const std::size_t b = training_block(psi, j);
      const char* label = a == b                         ? "case1"
                          : a == b + 1                   ? "case2"
                          : a == 0 && b == v_count - 1   ? "case3"
                                                         : "other";
      for (int u = 0; u <= lambda; ++u) {
        const CycloInt value = training_pccf(psi, i, j, u);
        if (i == j && u == 0) {
          if (value.as_integer() != energy) {
            v.violations.push_back({"energy", i, j, 0, magnitude(value)});
          }
        } else if (!value.is_zero()) {
          v.violations.push_back({label, i, j, u, magnitude(value)});
        }
      }
    }
  }
  return v;
}

Eigen::MatrixXcd build_ls_model_matrix(const TrainingMatrix& psi, int lambda) {
  if (lambda < 0 || static_cast<std::size_t>(lambda) + 1 > psi.cols()) {
    throw ShapeError("delay spread must satisfy lambda + 1 <= L'");
  }
  const auto len = static_cast<Eigen::Index>(psi.cols());
  const Eigen::Index taps = lambda + 1;
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(len, static_cast<Eigen::Index>(psi.rows()) * taps);
  for (std::size_t p = 0; p < psi.rows(); ++p) {
    std::vector<ComplexSample> samples(psi.cols());
    for (std::size_t t = 0; t < psi.cols(); ++t) {
      const int e = psi.at(p, t);
      if (e != TrainingMatrix::kSilent) samples[t] = unit_root(psi.q(), e);
    }
    for (Eigen::Index c = 0; c < taps; ++c) {
      for (Eigen::Index t = 0; t < len; ++t) {
        x(t, static_cast<Eigen::Index>(p) * taps + c) = samples[static_cast<std::size_t>(((t - c) % len + len) % len)];
      }
    }
  }
  return x;
}

std::vector<CycloInt> exact_gram(const TrainingMatrix& psi, int lambda) {
  const std::size_t taps = static_cast<std::size_t>(lambda) + 1;
  const std::size_t dim = psi.rows() * taps;
  std::vector<CycloInt> out(dim * dim, CycloInt(psi.q()));
  for (std::size_t p = 0; p < psi.rows(); ++p) {
    for (std::size_t c = 0; c < taps; ++c) {
      for (std::size_t p2 = 0; p2 < psi.rows(); ++p2) {
        for (std::size_t c2 = 0; c2 < taps; ++c2) {
          out[(p * taps + c) * dim + p2 * taps + c2] =
              training_pccf(psi, p2, p, static_cast<int>(c) - static_cast<int>(c2));
        }
      }
    }
  }
  return out;
}

bool gram_is_scaled_identity(const TrainingMatrix& psi, int lambda) {
  const auto gram = exact_gram(psi, lambda);
  const std::size_t dim = psi.rows() * (static_cast<std::size_t>(lambda) + 1);
  const auto energy = static_cast<std::int64_t>(psi.energy());
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const CycloInt& g = gram[r * dim + c];
      if (r == c ? g.as_integer() != energy : !g.is_zero()) return false;
    }
  }
  return true;
}

std::string training_matrix_to_csv(const TrainingMatrix& psi) {
  std::string out;
  for (std::size_t r = 0; r < psi.rows(); ++r) {
    for (std::size_t c = 0; c < psi.cols(); ++c) {
      if (c) out += ',';
      out += format_entry(psi.q(), psi.at(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string training_matrix_to_json(const TrainingMatrix& psi) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < psi.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int e : psi.row(r)) row.push_back(e == TrainingMatrix::kSilent ? nlohmann::json(nullptr) : nlohmann::json(e));
    rows.push_back(std::move(row));
  }
  nlohmann::json doc = {{"source", psi.source_id()},
                        {"q", psi.q()},
                        {"Nt", psi.config().nt},
                        {"Na", psi.config().na},
                        {"V", psi.config().blocks()},
                        {"N", psi.set_size()},
                        {"L", psi.sub_length()},
                        {"E", psi.energy()},
                        {"rows", std::move(rows)}};
  return doc.dump();
}

ActivationTable activation_table(const GsmConfig& cfg) {
  validate_gsm_config(cfg);
  const std::size_t total = binomial(cfg.nt, cfg.na);
  int bits = 0;
  while ((std::size_t{2} << bits) <= total) ++bits;
  ActivationTable table{{}, bits};
  if (cfg.nt == 4 && cfg.na == 2) {
    table.patterns = {{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}, {0, 0, 1, 1}};
    return table;
  }
  const std::size_t wanted = std::size_t{1} << bits;
  std::vector<int> idx(static_cast<std::size_t>(cfg.na));
  for (int i = 0; i < cfg.na; ++i) idx[i] = i;
  while (table.patterns.size() < wanted) {
    std::vector<int> pattern(static_cast<std::size_t>(cfg.nt), 0);
    for (int i : idx) pattern[i] = 1;
    table.patterns.push_back(std::move(pattern));
    int pos = cfg.na - 1;
    while (pos >= 0 && idx[pos] == cfg.nt - cfg.na + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < cfg.na; ++i) idx[i] = idx[i - 1] + 1;
  }
  return table;
}

std::vector<std::vector<int>> map_bits_to_gsm_block(std::string_view bits, const GsmConfig& cfg) {
  if (cfg.modulation_order != 2) throw ShapeError("only BPSK mapping is supported");
  const ActivationTable table = activation_table(cfg);
  const std::size_t per_symbol = static_cast<std::size_t>(table.bits_per_pattern + cfg.na);
  if (bits.size() % per_symbol != 0) {
    throw ShapeError("bit count must be a multiple of " + std::to_string(per_symbol));
  }
  for (char b : bits) {
    if (b != '0' && b != '1') throw ParseError("bits must be '0' or '1'");
  }
  std::vector<std::vector<int>> block(static_cast<std::size_t>(cfg.nt));
  for (std::size_t start = 0; start < bits.size(); start += per_symbol) {
    std::size_t index = 0;
    for (int b = 0; b < table.bits_per_pattern; ++b) index = 2 * index + static_cast<std::size_t>(bits[start + b] - '0');
    const auto& pattern = table.patterns[index];
    std::size_t next = start + static_cast<std::size_t>(table.bits_per_pattern);
    for (int ant = 0; ant < cfg.nt; ++ant) {
      int symbol = 0;
      if (pattern[ant]) symbol = bits[next++] == '0' ? 1 : -1;
      block[ant].push_back(symbol);
    }
  }
  return block;
}

}  // namespace eczcs
