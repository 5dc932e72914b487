#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace edeg::numerics {

using ExactInteger = boost::multiprecision::cpp_int;

ExactInteger exact_factorial(std::uint64_t n);

/// a / b, throwing std::logic_error when b does not divide a.
ExactInteger exact_divide(const ExactInteger& a, const ExactInteger& b);

/// Nearest double (may be +inf for huge values).
double to_double(const ExactInteger& x);

}  // namespace edeg::numerics
