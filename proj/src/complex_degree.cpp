#include "edeg/complex_degree.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "edeg/numerics/gamma.hpp"

namespace edeg::complex_degree {

using numerics::exact_factorial;

ExactInteger delta_complex(int k, int n) {
  if (k < 0 || n <= k) throw std::domain_error("delta_complex: need 0 <= k < n");
  const auto d = static_cast<std::uint64_t>(k + 1) * static_cast<std::uint64_t>(n - k);
  ExactInteger num = exact_factorial(d);  // d · Γ(d) = d!
  for (int i = 0; i <= k; ++i) num *= exact_factorial(static_cast<std::uint64_t>(i));
  ExactInteger den = 1;
  for (int i = n - k; i <= n; ++i) den *= exact_factorial(static_cast<std::uint64_t>(i));
  return numerics::exact_divide(num, den);
}

double log_a_complex(int k) {
  if (k < 0) throw std::domain_error("log_a_complex: k must be non-negative");
  double s = 0.0;
  for (int i = 1; i <= k + 1; ++i) s += numerics::log_gamma(i);
  const double kk = k;
  return s - 0.5 * kk * std::log(2.0 * std::numbers::pi) -
         (kk * (kk + 1.0) - 0.5) * std::log(kk + 1.0);
}

double b_complex(int k) { return std::pow(k + 1.0, k + 1.0); }

double log_delta_complex_asymptotic(int k, int n) {
  if (k <= 0 || n <= k) throw std::domain_error("delta_complex_asymptotic: need 0 < k < n");
  const double kk = k;
  return log_a_complex(k) + n * (kk + 1.0) * std::log(kk + 1.0) -
         0.5 * kk * (kk + 2.0) * std::log(static_cast<double>(n));
}

double delta_complex_asymptotic(int k, int n) { return std::exp(log_delta_complex_asymptotic(k, n)); }

}  // namespace edeg::complex_degree
