#include <doctest.h>

#include <cmath>
#include <numbers>

#include "edeg/complex_degree.hpp"
#include "edeg/expected_degree.hpp"
#include "edeg/numerics/exact.hpp"

using namespace edeg;
using complex_degree::delta_complex;
using numerics::ExactInteger;

namespace {

// (2m)!/(m!(m+1)!) by the product formula, built without factorials.
ExactInteger catalan(int m) {
  ExactInteger c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

TEST_CASE("small complex degrees") {
  CHECK(delta_complex(1, 3) == 2);
  CHECK(delta_complex(0, 5) == 1);
  CHECK(delta_complex(2, 5) == 42);
  CHECK(delta_complex(1, 4) == 5);
  CHECK_THROWS(delta_complex(3, 3));
  CHECK_THROWS(delta_complex(-1, 3));
}

TEST_CASE("lines: Catalan numbers") {
  for (int n = 3; n <= 15; ++n) CHECK(delta_complex(1, n) == catalan(n - 1));
}

TEST_CASE("integrality and duality up to n = 30") {
  for (int n = 1; n <= 30; ++n)
    for (int k = 0; k < n; ++k) {
      const ExactInteger d = delta_complex(k, n);
      CHECK(d >= 1);
      CHECK(d == delta_complex(n - k - 1, n));
    }
}

TEST_CASE("c(n) equals n(n-2)/2 times the complex degree of lines") {
  for (int n = 3; n <= 15; ++n) {
    const ExactInteger bridge = ExactInteger(n) * (n - 2) * delta_complex(1, n);
    CHECK(bridge % 2 == 0);
    const double c = c_coefficient(n);
    CHECK(c == doctest::Approx(numerics::to_double(bridge / 2)).epsilon(1e-12));
  }
}

TEST_CASE("complex asymptotic constants") {
  CHECK(complex_degree::b_complex(1) == 4.0);
  CHECK(std::exp(complex_degree::log_a_complex(1)) ==
        doctest::Approx(1 / (4 * std::sqrt(std::numbers::pi))).epsilon(1e-14));
  CHECK(complex_degree::b_complex(2) == 27.0);
}

TEST_CASE("complex asymptote converges at rate 1/n") {
  // Exact Catalan asymptotics give exact/asymptote = 1 + 3/(8n) + O(n^-2) here.
  const double r40 = numerics::to_double(delta_complex(1, 40)) / complex_degree::delta_complex_asymptotic(1, 40);
  CHECK(r40 > 1.0);
  CHECK(r40 < 1.03);
  for (int k : {1, 2})
    for (int n : {10, 20}) {
      const double e1 = std::abs(numerics::to_double(delta_complex(k, n)) /
                                     complex_degree::delta_complex_asymptotic(k, n) - 1);
      const double e2 = std::abs(numerics::to_double(delta_complex(k, 2 * n)) /
                                     complex_degree::delta_complex_asymptotic(k, 2 * n) - 1);
      CHECK(e2 <= 0.6 * e1);
    }
}
