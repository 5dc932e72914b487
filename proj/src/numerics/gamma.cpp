#include "edeg/numerics/gamma.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

namespace edeg::numerics {

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("log_gamma: argument must be positive and finite, got " +
                            std::to_string(x));
  return boost::math::lgamma(x);
}

double log_gamma_ratio(double x, double a, double b) {
  if (!(x + a > 0.0) || !(x + b > 0.0))
    throw std::domain_error("gamma_ratio: arguments must be positive");
  return log_gamma(x + a) - log_gamma(x + b);
}

double gamma_ratio(double x, double a, double b) { return std::exp(log_gamma_ratio(x, a, b)); }

}  // namespace edeg::numerics
