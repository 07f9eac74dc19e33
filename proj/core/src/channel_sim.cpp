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

#include "eczcs/channel_sim.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <thread>

#include "eczcs/error.hpp"

namespace eczcs {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// LDLT of X^H X with a reciprocal-condition guard.
Eigen::LDLT<Eigen::MatrixXcd> factor_normal(const Eigen::MatrixXcd& x, const std::string& id) {
  const Eigen::MatrixXcd gram = x.adjoint() * x;
  Eigen::LDLT<Eigen::MatrixXcd> ldlt(gram);
  // Eigen's rcond estimate skips zero pivots, so the pivots are checked too.
  const auto pivots = ldlt.vectorD().cwiseAbs();
  const bool tiny_pivot = pivots.size() > 0 && pivots.minCoeff() <= 1e-12 * pivots.maxCoeff();
  if (ldlt.info() != Eigen::Success || tiny_pivot || ldlt.rcond() < 1e-12) {
    throw RankDeficientError("normal matrix X^H X is singular for training matrix '" +
                             (id.empty() ? std::string("<unnamed>") : id) + "'");
  }
  return ldlt;
}

Family random_binary_family(std::size_t sets, std::size_t set_size, std::size_t length,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<SequenceSet> out;
  for (std::size_t m = 0; m < sets; ++m) {
    std::vector<PhaseSequence> members;
    for (std::size_t n = 0; n < set_size; ++n) {
      std::vector<int> phases(length);
      for (int& p : phases) p = coin(rng) ? 1 : 0;
      members.emplace_back(2, std::move(phases));
    }
    out.emplace_back(std::move(members));
  }
  return Family(std::move(out));
}

}  // namespace

Eigen::VectorXcd ChannelRealization::stacked() const {
  Eigen::VectorXcd out(taps.size());
  const Eigen::Index width = taps.cols();
  for (Eigen::Index p = 0; p < taps.rows(); ++p) {
    for (Eigen::Index i = 0; i < width; ++i) out(p * width + i) = taps(p, i);
  }
  return out;
}

ChannelRealization sample_channel(int lambda, int nt, std::mt19937_64& rng) {
  if (lambda < 0 || nt < 1) throw ShapeError("need lambda >= 0 and Nt >= 1");
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5 / (lambda + 1)));
  ChannelRealization ch{Eigen::MatrixXcd(nt, lambda + 1)};
  for (int p = 0; p < nt; ++p) {
    for (int i = 0; i <= lambda; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      ch.taps(p, i) = {re, im};
    }
  }
  return ch;
}

double noise_variance(double ebn0_db) { return std::pow(10.0, -ebn0_db / 10.0); }

LsEstimate ls_estimate(const Eigen::MatrixXcd& x, const Eigen::VectorXcd& y,
                       const std::string& matrix_id) {
  if (x.rows() != y.size()) throw ShapeError("observation length must match X rows");
  const auto ldlt = factor_normal(x, matrix_id);
  const Eigen::VectorXcd rhs = x.adjoint() * y;
  LsEstimate est{ldlt.solve(rhs), 0.0};
  est.residual = (x.adjoint() * (x * est.h) - rhs).norm();
  return est;
}

double analytic_mse(const Eigen::MatrixXcd& x, double sigma2, const std::string& matrix_id) {
  const auto ldlt = factor_normal(x, matrix_id);
  const Eigen::MatrixXcd inv = ldlt.solve(Eigen::MatrixXcd::Identity(x.cols(), x.cols()));
  return sigma2 / static_cast<double>(x.cols()) * inv.trace().real();
}

void validate_sim_config(const SimConfig& cfg) {
  if (cfg.trials < 1) throw ShapeError("trials must be at least 1");
  if (cfg.ebn0_db.empty() || cfg.lambdas.empty()) throw ShapeError("simulation grids must be non-empty");
  for (int lambda : cfg.lambdas) {
    if (lambda < 0) throw ShapeError("delay spread must be non-negative");
  }
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t point, std::uint64_t trial) {
  return splitmix64(splitmix64(splitmix64(master) ^ point) ^ trial);
}

MseReport monte_carlo_mse(const TrainingMatrix& psi, const SimConfig& cfg) {
  validate_sim_config(cfg);
  MseReport report{psi.source_id(), {}};
  const int nt = static_cast<int>(psi.rows());
  const auto energy = static_cast<double>(psi.energy());
  std::uint64_t point = 0;
  for (int lambda : cfg.lambdas) {
    Eigen::MatrixXcd x;
    Eigen::MatrixXcd pinv;
    std::string failure;
    try {
      x = build_ls_model_matrix(psi, lambda);
      const auto ldlt = factor_normal(x, psi.source_id());
      pinv = ldlt.solve(x.adjoint());
    } catch (const Error& e) {
      failure = e.what();
    }
    for (double ebn0 : cfg.ebn0_db) {
      const double sigma2 = cfg.noiseless ? 0.0 : noise_variance(ebn0);
      MsePoint pt{ebn0, lambda, 0.0, 0.0, sigma2 / energy, cfg.trials, false, {}};
      const std::uint64_t this_point = point++;
      if (!failure.empty()) {
        pt.failed = true;
        pt.message = failure;
        report.points.push_back(pt);
        continue;
      }
      pt.analytic = analytic_mse(x, sigma2, psi.source_id());
      const double per_tap = 1.0 / static_cast<double>(x.cols());
      std::vector<double> errors(cfg.trials);
      auto run = [&](std::size_t begin, std::size_t end) {
        std::normal_distribution<double> noise(0.0, std::sqrt(sigma2 / 2.0));
        for (std::size_t t = begin; t < end; ++t) {
          std::mt19937_64 rng(trial_seed(cfg.master_seed, this_point, t));
          const Eigen::VectorXcd h = sample_channel(lambda, nt, rng).stacked();
          Eigen::VectorXcd y = x * h;
          if (sigma2 > 0.0) {
            for (Eigen::Index i = 0; i < y.size(); ++i) {
              const double re = noise(rng);
              const double im = noise(rng);
              y(i) += std::complex<double>(re, im);
            }
          }
          errors[t] = (pinv * y - h).squaredNorm() * per_tap;
        }
      };
      const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(cfg.threads, cfg.trials));
      if (workers == 1) {
        run(0, cfg.trials);
      } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (cfg.trials + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
          const std::size_t begin = w * chunk;
          const std::size_t end = std::min(cfg.trials, begin + chunk);
          if (begin < end) pool.emplace_back(run, begin, end);
        }
        for (auto& th : pool) th.join();
      }
      pt.empirical = std::accumulate(errors.begin(), errors.end(), 0.0) / static_cast<double>(cfg.trials);
      report.points.push_back(pt);
    }
  }
  return report;
}

std::string mse_report_to_csv(const MseReport& report) {
  std::string out =
      "# sigma^2 = 10^(-EbN0/10) with unit-energy training symbols; MSE normalised by Nt*(lambda+1)\n"
      "EbN0_dB,lambda,empirical_mse,analytic_mse,floor,trials,matrix_id\n";
  char buf[256];
  for (const auto& p : report.points) {
    if (p.failed) {
      std::snprintf(buf, sizeof buf, "%.12g,%d,nan,nan,%.12g,%zu,", p.ebn0_db, p.lambda, p.floor, p.trials);
    } else {
      std::snprintf(buf, sizeof buf, "%.12g,%d,%.12g,%.12g,%.12g,%zu,", p.ebn0_db, p.lambda, p.empirical,
                    p.analytic, p.floor, p.trials);
    }
    out += buf;
    out += report.matrix_id;
    out += '\n';
  }
  return out;
}

TrainingMatrix baseline_random_binary(const GsmConfig& cfg, std::size_t set_size,
                                      std::size_t length, std::uint64_t seed) {
  validate_gsm_config(cfg);
  return build_training_matrix(
      random_binary_family(static_cast<std::size_t>(cfg.na), set_size, length, seed), cfg,
      "random-binary-" + std::to_string(seed));
}

PhaseSequence zadoff_chu(std::size_t length, int root) {
  if (length < 1) throw ConstructionError("Zadoff-Chu length must be positive");
  const auto l = static_cast<long long>(length);
  if (root < 1 || std::gcd(static_cast<long long>(root), l) != 1) {
    throw ConstructionError("Zadoff-Chu root " + std::to_string(root) + " is not coprime with " +
                            std::to_string(length));
  }
  const long long q = 2 * l;
  std::vector<int> phases;
  for (long long k = 0; k < l; ++k) {
    const long long e = l % 2 == 0 ? root * k * k : root * k * (k + 1);
    phases.push_back(static_cast<int>(((-e) % q + q) % q));
  }
  return PhaseSequence(static_cast<int>(q), std::move(phases));
}

std::vector<int> zadoff_chu_roots(std::size_t length, std::size_t count) {
  std::vector<int> roots;
  for (int r = 1; roots.size() < count; ++r) {
    if (length > 1 && static_cast<std::size_t>(r) >= length) {
      throw ConstructionError("not enough Zadoff-Chu roots coprime with " + std::to_string(length));
    }
    if (std::gcd(static_cast<std::size_t>(r), length) == 1) roots.push_back(r);
  }
  return roots;
}

TrainingMatrix baseline_zadoff_chu(const GsmConfig& cfg, std::size_t set_size, std::size_t length,
                                   std::vector<int> roots) {
  validate_gsm_config(cfg);
  const std::size_t needed = static_cast<std::size_t>(cfg.na) * set_size;
  if (roots.empty()) roots = zadoff_chu_roots(length, needed);
  if (roots.size() < needed) throw ConstructionError("need Na*N Zadoff-Chu roots");
  std::vector<SequenceSet> sets;
  std::string id = "zadoff-chu-" + std::to_string(length) + "-r";
  for (std::size_t a = 0; a < static_cast<std::size_t>(cfg.na); ++a) {
    std::vector<PhaseSequence> members;
    for (std::size_t n = 0; n < set_size; ++n) {
      const int r = roots[a * set_size + n];
      members.push_back(zadoff_chu(length, r));
      id += (a || n ? "," : "") + std::to_string(r);
    }
    sets.emplace_back(std::move(members));
  }
  return build_training_matrix(Family(std::move(sets)), cfg, id);
}

TrainingMatrix baseline_zccs(const Family& zccs, const GsmConfig& cfg, std::string source_id) {
  return build_training_matrix(zccs, cfg, std::move(source_id));
}

}  // namespace eczcs
