#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace edeg::numerics {

struct QuadratureEstimate {
  double value = 0.0;
  double error_bound = 0.0;  // engine estimate of |value - integral|, >= 0
  std::size_t evaluations = 0;
  bool converged = true;  // false: subdivision/level limit reached, value is best effort
};

using RealFunction = std::function<double(double)>;

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-15;
  int max_subdivisions = 4000;  // Gauss–Kronrod interval budget
  int max_levels = 10;          // tanh-sinh step halvings
};

/// Globally adaptive Gauss–Kronrod (10/21-point) on [a, b]. Nodes never touch
/// the endpoints, so integrable endpoint singularities are allowed. Relative
/// tolerances below 100·eps are raised to 100·eps.
QuadratureEstimate gauss_kronrod(const RealFunction& f, double a, double b,
                                 const QuadratureOptions& opts = {});

/// Double-exponential (tanh-sinh) rule on [a, b]. Abscissae are generated as
/// distances from the nearer endpoint, so x - a and b - x keep full relative
/// precision close to the ends.
QuadratureEstimate tanh_sinh(const RealFunction& f, double a, double b,
                             const QuadratureOptions& opts = {});

/// ∫_a^∞ f via x = a + t/(1-t) and Gauss–Kronrod on t ∈ [0, 1).
QuadratureEstimate integrate_to_infinity(const RealFunction& f, double a,
                                         const QuadratureOptions& opts = {});

/// Default engine: Gauss–Kronrod with the given relative tolerance.
QuadratureEstimate adaptive_quad(const RealFunction& f, double a, double b,
                                 double rel_tol = 1e-10);

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss–Legendre rule (Newton on the three-term recurrence).
GaussRule gauss_legendre(std::size_t n);

}  // namespace edeg::numerics
