#include <cmath>
#include <numbers>
#include <stdexcept>

#include "edeg/asymptotics.hpp"
#include "edeg/numerics/gamma.hpp"

namespace edeg::asymptotics {

using numerics::log_gamma;

namespace {

constexpr double kLogPi = 1.1447298858494002;  // ln π

void require_beta_domain(int k, int n) {
  if (k < 1) throw std::domain_error("beta: k must be >= 1");
  if (n < 2 * k + 1) throw std::domain_error("beta: need n >= 2k+1");
}

}  // namespace

double log_b_coefficient(int k) {
  if (k < 0) throw std::domain_error("b_coefficient: k must be >= 0");
  const double kk = k;
  return (kk + 1.0) * (log_gamma(0.5 * (kk + 2.0)) - log_gamma(0.5 * (kk + 1.0)) + 0.5 * kLogPi);
}

double b_coefficient(int k) { return std::exp(log_b_coefficient(k)); }

double log_a_coefficient(int k, double lambda) {
  if (k < 0) throw std::domain_error("a_coefficient: k must be >= 0");
  if (!(lambda > 0.0)) throw std::domain_error("a_coefficient: Λ_k must be positive");
  const double kk = k;
  return std::log(lambda) + 0.25 * kk * (kk - 3.0) * std::log(2.0) - 0.5 * kk * (kk + 2.0) * kLogPi +
         0.5 * std::log(kk + 1.0) + 0.25 * kk * (kk + 3.0) * std::log((kk + 1.0) / (kk + 2.0)) +
         kk * (kk + 1.0) * (log_gamma(0.5 * (kk + 1.0)) - log_gamma(0.5 * (kk + 2.0)));
}

double a_coefficient(int k, double lambda) { return std::exp(log_a_coefficient(k, lambda)); }

double a_coefficient(int k) { return k == 0 ? 1.0 : a_coefficient(k, lambda_value(k)); }

double log_beta(int k, int n) {
  require_beta_domain(k, n);
  const double d = static_cast<double>(k + 1) * (n - k);
  double denom = 0.0;
  for (int l = 0; l <= k; ++l) denom += log_gamma(n - 2.0 * l);
  return d * kLogPi + log_gamma(d) - denom;
}

double log_beta_half_integer(int k, int n) {
  require_beta_domain(k, n);
  const double kk = k;
  const double d = (kk + 1.0) * (n - k);
  double denom = 0.0;
  for (int j = 0; j <= 2 * k + 1; ++j) denom += log_gamma(0.5 * (n + 1.0 - j));
  return (kk + 1.0) * std::log(2.0 * std::numbers::pi) + d * std::log(0.5 * std::numbers::pi) -
         0.5 * (kk + 1.0) * kLogPi + log_gamma(d) - denom;
}

double log_beta_asymptotic(int k, int n) {
  require_beta_domain(k, n);
  const double kk = k;
  const double d = (kk + 1.0) * (n - k);
  return d * std::log(std::numbers::pi * (kk + 1.0)) - 0.5 * kk * std::log(2.0 * std::numbers::pi) -
         0.5 * std::log(kk + 1.0) + 0.5 * kk * std::log(static_cast<double>(n));
}

double log_delta_real_asymptotic(int k, int n, double lambda) {
  if (n < 1) throw std::domain_error("delta_real_asymptotic: n must be positive");
  if (k == 0) return 0.0;
  const double kk = k;
  return log_a_coefficient(k, lambda) + n * log_b_coefficient(k) -
         0.25 * kk * (kk + 1.0) * std::log(static_cast<double>(n));
}

double delta_real_asymptotic(int k, int n, double lambda) {
  return std::exp(log_delta_real_asymptotic(k, n, lambda));
}

double delta_real_asymptotic(int k, int n) {
  return k == 0 ? 1.0 : delta_real_asymptotic(k, n, lambda_value(k));
}

}  // namespace edeg::asymptotics
