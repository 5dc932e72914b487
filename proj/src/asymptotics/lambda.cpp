#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>
#include <vector>

#include "edeg/asymptotics.hpp"
#include "edeg/errors.hpp"
#include "edeg/numerics/gamma.hpp"

namespace edeg::asymptotics {

using numerics::log_gamma;
using numerics::Rng;

double lambda_closed(int k) {
  if (k == 1) return 1.0;
  if (k == 2) return std::sqrt(std::numbers::pi / 3.0);
  throw Unsupported("lambda_closed: closed form only known for k = 1, 2");
}

MonteCarloEstimate lambda_mc_coefficient(int k, std::uint64_t samples, std::uint64_t seed,
                                         unsigned threads) {
  if (k < 1 || k > kMaxCoefficientLambdaK)
    throw Unsupported("lambda_mc_coefficient: supported range is 1 <= k <= 4");

  struct Draw {
    std::vector<double> a;
    double box_volume;
  };
  auto sampler = [k](Rng& rng) {
    Draw d{std::vector<double>(static_cast<std::size_t>(k)), 1.0};
    const double t = rng.exponential();
    d.a[0] = -t;
    for (int i = 2; i <= k; ++i) {
      const double m = std::pow(2.0 * t, 0.5 * (i + 1));
      d.a[static_cast<std::size_t>(i) - 1] = m * (2.0 * rng.uniform() - 1.0);
      d.box_volume *= 2.0 * m;
    }
    return d;
  };
  auto weight = [](const Draw& d) {
    return all_roots_real(MonicDepressedPolynomial(d.a)).all_real ? d.box_volume : 0.0;
  };
  return numerics::mc_mean(sampler, weight, samples, seed, threads);
}

double lambda_sphere_constant(int k) {
  const double kk = k;
  const double K = 0.5 * kk * (kk + 1.0);
  return std::exp(log_gamma(0.5 * (K + kk)) + 0.5 * (K + kk - 2.0) * std::log(2.0)) /
         std::sqrt(kk + 1.0);
}

MonteCarloEstimate lambda_mc_sphere(int k, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (k < 1) throw std::domain_error("lambda_mc_sphere: k must be >= 1");
  const double kk = k;
  const double sphere_area = 2.0 * std::pow(std::numbers::pi, 0.5 * kk) / std::exp(log_gamma(0.5 * kk));
  const double chambers = std::exp(log_gamma(kk + 2.0));  // (k+1)!
  const double scale = lambda_sphere_constant(k) * sphere_area / chambers;
  const auto dim = static_cast<std::size_t>(k) + 1;

  // Uniform point on the unit sphere of μ^⊥: project a Gaussian, normalize.
  auto sampler = [dim](Rng& rng) {
    std::vector<double> x(dim);
    double mean = 0.0;
    for (auto& v : x) {
      v = rng.normal();
      mean += v;
    }
    mean /= static_cast<double>(dim);
    double norm2 = 0.0;
    for (auto& v : x) {
      v -= mean;
      norm2 += v * v;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& v : x) v *= inv;
    std::sort(x.begin(), x.end(), std::greater<>());
    return x;
  };
  auto sqrt_disc = [scale](const std::vector<double>& x) {
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) prod *= x[i] - x[j];
    return scale * prod;
  };
  return numerics::mc_mean(sampler, sqrt_disc, samples, seed, threads);
}

double lambda_value(int k, std::uint64_t samples, std::uint64_t seed) {
  if (k == 1 || k == 2) return lambda_closed(k);
  static std::mutex mutex;
  static std::map<std::tuple<int, std::uint64_t, std::uint64_t>, double> cache;
  const auto key = std::make_tuple(k, samples, seed);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const double value = lambda_mc_sphere(k, samples, seed).mean;
  std::lock_guard lock(mutex);
  cache.emplace(key, value);
  return value;
}

}  // namespace edeg::asymptotics
