#include "edeg/numerics/exact.hpp"

#include <stdexcept>

namespace edeg::numerics {

ExactInteger exact_factorial(std::uint64_t n) {
  ExactInteger r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

ExactInteger exact_divide(const ExactInteger& a, const ExactInteger& b) {
  if (b == 0) throw std::domain_error("exact_divide: division by zero");
  ExactInteger q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw std::logic_error("exact_divide: non-exact division");
  return q;
}

double to_double(const ExactInteger& x) { return x.convert_to<double>(); }

}  // namespace edeg::numerics
