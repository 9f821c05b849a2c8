// Copyright 2026 The admlab Authors.
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

#ifndef ADMLAB_MONTE_CARLO_HPP_
#define ADMLAB_MONTE_CARLO_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "admlab/rng.hpp"

namespace admlab {

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  /// Fixed work split; results depend on (seed, samples, shards) only.
  unsigned shards = 16;
  /// Worker threads, 0 = ADMLAB_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
};

/// Running mean and sum of squared deviations (Welford), mergeable with the
/// pairwise update of Chan, Golub and LeVeque.
class MomentAccumulator {
 public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  void merge(const MomentAccumulator& other) {
    if (other.count_ == 0) return;
    if (count_ == 0) {
      *this = other;
      return;
    }
    const double n_a = static_cast<double>(count_);
    const double n_b = static_cast<double>(other.count_);
    const double n = n_a + n_b;
    const double delta = other.mean_ - mean_;
    mean_ += delta * n_b / n;
    m2_ += other.m2_ + delta * delta * n_a * n_b / n;
    count_ += other.count_;
  }

  std::uint64_t count() const { return count_; }
  double mean() const { return mean_; }
  double variance() const { return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0; }
  double std_error() const {
    return count_ > 0 ? std::sqrt(variance() / static_cast<double>(count_)) : 0.0;
  }

  MCEstimate estimate(std::uint64_t seed) const { return {mean_, std_error(), count_, seed}; }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Threads to use for `requested` (0 = default), capped by ADMLAB_THREADS.
unsigned thread_budget(unsigned requested);

/// Runs fn(shard) for every shard on up to `threads` workers.
void for_each_shard(unsigned shards, unsigned threads, const std::function<void(unsigned)>& fn);

inline std::uint64_t shard_share(const McConfig& cfg, unsigned shard) {
  return cfg.samples / cfg.shards + (shard < cfg.samples % cfg.shards ? 1 : 0);
}

/// Draw helpers over a Philox stream. Distribution objects keep state, so
/// one Sampler belongs to one shard.
class Sampler {
 public:
  explicit Sampler(PhiloxEngine& rng) : rng_(rng) {}

  double uniform() { return rng_.uniform01(); }
  double normal() { return normal_(rng_); }
  /// Gamma(shape, rate 1).
  double gamma(double shape) {
    return gamma_(rng_, std::gamma_distribution<double>::param_type(shape, 1.0));
  }
  double chi_square(double dof) { return 2.0 * gamma(0.5 * dof); }
  double beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    return x / (x + y);
  }

  PhiloxEngine& engine() { return rng_; }

 private:
  PhiloxEngine& rng_;
  std::normal_distribution<double> normal_;
  std::gamma_distribution<double> gamma_;
};

/// Splits cfg.samples across cfg.shards, runs body(sampler, accumulators,
/// count) per shard on its own (seed, stream, shard) Philox stream, and
/// merges the accumulators in shard order.
template <std::size_t K, typename Body>
std::array<MomentAccumulator, K> run_sharded(const McConfig& cfg, std::uint32_t stream,
                                             Body&& body) {
  const unsigned shards = cfg.shards == 0 ? 1 : cfg.shards;
  McConfig effective = cfg;
  effective.shards = shards;
  std::vector<std::array<MomentAccumulator, K>> partial(shards);
  for_each_shard(shards, cfg.threads, [&](unsigned s) {
    PhiloxEngine rng(cfg.seed, stream, s);
    Sampler sampler(rng);
    body(sampler, partial[s], shard_share(effective, s));
  });
  std::array<MomentAccumulator, K> total{};
  for (const auto& part : partial) {
    for (std::size_t k = 0; k < K; ++k) total[k].merge(part[k]);
  }
  return total;
}

}  // namespace admlab

#endif  // ADMLAB_MONTE_CARLO_HPP_
