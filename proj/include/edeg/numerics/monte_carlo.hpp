#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <atomic>
#include <vector>

#include "edeg/numerics/rng.hpp"

namespace edeg::numerics {

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample_std / sqrt(samples)
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Non-finite integrand value at a given global sample index.
class MonteCarloFailure : public std::runtime_error {
 public:
  explicit MonteCarloFailure(std::uint64_t index)
      : std::runtime_error("non-finite integrand value at sample " + std::to_string(index)),
        index_(index) {}
  std::uint64_t sample_index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

/// Welford accumulator with Chan's pairwise merge.
struct RunningStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) noexcept {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }

  void merge(const RunningStats& o) noexcept {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double n1 = static_cast<double>(count);
    const double n2 = static_cast<double>(o.count);
    const double n = n1 + n2;
    const double d = o.mean - mean;
    mean += d * n2 / n;
    m2 += o.m2 + d * d * n1 * n2 / n;
    count += o.count;
  }

  double sample_variance() const noexcept {
    return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
  }
};

/// Samples per shard. Fixed so that the shard plan, and hence every result,
/// depends only on (samples, seed) and never on the worker count.
inline constexpr std::uint64_t kShardSize = 1u << 14;

/// Runs fn(first_index, count, rng) over consecutive shards of `samples`,
/// shard s seeded with derive_seed(seed, s). Results are returned in shard
/// order. Exceptions from the lowest failing shard are rethrown.
template <class ShardFn>
auto run_shards(std::uint64_t samples, std::uint64_t seed, unsigned threads, ShardFn fn) {
  using Result = decltype(fn(std::uint64_t{}, std::uint64_t{}, std::declval<Rng&>()));
  const std::uint64_t shards = (samples + kShardSize - 1) / kShardSize;
  std::vector<Result> results(shards);
  std::vector<std::exception_ptr> errors(shards);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    for (std::uint64_t s = next++; s < shards; s = next++) {
      const std::uint64_t first = s * kShardSize;
      const std::uint64_t count = std::min(kShardSize, samples - first);
      Rng rng(derive_seed(seed, s));
      try {
        results[s] = fn(first, count, rng);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    }
  };

  const unsigned nthreads =
      static_cast<unsigned>(std::clamp<std::uint64_t>(threads == 0 ? 1 : threads, 1, std::max<std::uint64_t>(shards, 1)));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

inline MonteCarloEstimate finalize(const RunningStats& stats, std::uint64_t seed) {
  MonteCarloEstimate est;
  est.mean = stats.mean;
  est.samples = stats.count;
  est.seed = seed;
  est.std_error = stats.count > 0
                      ? std::sqrt(stats.sample_variance() / static_cast<double>(stats.count))
                      : 0.0;
  return est;
}

/// Mean of f(sampler(rng)) over `samples` draws. Deterministic for a fixed
/// seed regardless of `threads`.
template <class Sampler, class Fn>
MonteCarloEstimate mc_mean(Sampler&& sampler, Fn&& f, std::uint64_t samples, std::uint64_t seed,
                           unsigned threads = 1) {
  if (samples < 2) throw std::invalid_argument("mc_mean: need at least 2 samples");
  auto shards = run_shards(samples, seed, threads,
                           [&](std::uint64_t first, std::uint64_t count, Rng& rng) {
                             RunningStats st;
                             for (std::uint64_t i = 0; i < count; ++i) {
                               const double v = f(sampler(rng));
                               if (!std::isfinite(v)) throw MonteCarloFailure(first + i);
                               st.push(v);
                             }
                             return st;
                           });
  RunningStats total;
  for (const auto& s : shards) total.merge(s);
  return finalize(total, seed);
}

}  // namespace edeg::numerics
