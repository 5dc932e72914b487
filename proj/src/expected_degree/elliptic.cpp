#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "edeg/errors.hpp"
#include "edeg/expected_degree.hpp"

namespace edeg {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void require_unit_interval(double u, const char* who) {
  if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error(std::string(who) + ": u must lie in [0, 1]");
}

// Integrands are written with their sharp feature (width ~u) at θ = 0, where
// floating point resolves it; θ ↦ π/2 − θ maps the defining forms to these.
double integrate(const numerics::RealFunction& f, const char* who) {
  numerics::QuadratureOptions o;
  o.rel_tol = 1e-13;
  o.abs_tol = 1e-300;
  const auto e = numerics::gauss_kronrod(f, 0.0, kHalfPi, o);
  if (!e.converged) throw ConvergenceError(std::string(who) + ": quadrature did not converge", e.error_bound);
  return e.value;
}

}  // namespace

double f_elliptic(double u) {
  require_unit_interval(u, "f_elliptic");
  if (u == 0.0) return 0.0;
  const double u2 = u * u;
  return u * integrate(
                 [u2](double t) {
                   const double c = std::cos(t), s = std::sin(t);
                   return c * c / std::sqrt(s * s + u2 * c * c);
                 },
                 "f_elliptic");
}

double g_elliptic(double u) {
  require_unit_interval(u, "g_elliptic");
  const double u2 = u * u;
  return integrate(
      [u2](double t) {
        const double c = std::cos(t), s = std::sin(t);
        const double q = std::sqrt(s * s + u2 * c * c);
        return q > 0.0 ? s * s / q : 0.0;
      },
      "g_elliptic");
}

double f_elliptic_derivative(double u) {
  require_unit_interval(u, "f_elliptic_derivative");
  if (u == 0.0) return std::numeric_limits<double>::infinity();  // logarithmic blow-up
  const double u2 = u * u;
  return integrate(
      [u2](double t) {
        const double c2 = std::cos(t) * std::cos(t), s2 = std::sin(t) * std::sin(t);
        const double q = s2 + u2 * c2;
        return s2 * c2 / (q * std::sqrt(q));
      },
      "f_elliptic_derivative");
}

double g_elliptic_derivative(double u) {
  require_unit_interval(u, "g_elliptic_derivative");
  if (u == 0.0) return 0.0;
  const double u2 = u * u;
  return -u * integrate(
                  [u2](double t) {
                    const double c2 = std::cos(t) * std::cos(t), s2 = std::sin(t) * std::sin(t);
                    const double q = s2 + u2 * c2;
                    return s2 * c2 / (q * std::sqrt(q));
                  },
                  "g_elliptic_derivative");
}

}  // namespace edeg
