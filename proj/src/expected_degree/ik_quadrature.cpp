#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "edeg/errors.hpp"
#include "edeg/expected_degree.hpp"

namespace edeg {
namespace {

constexpr double kPi = std::numbers::pi;

using zonoid::Direction;
using zonoid::Vector;

// (p_k r^{k+1})^{n−k} q_k at a point x of S^k_+ with radial value r.
double ik_integrand(const Vector& x, double r, int n) {
  const int k = static_cast<int>(x.size()) - 1;
  double log_p = 0.0;
  for (Eigen::Index i = 0; i <= k; ++i) log_p += std::log(x[i]);
  double log_v = (n - 2.0 * k - 1) * log_p + (k + 1.0) * (n - k) * std::log(r);
  for (Eigen::Index i = 0; i <= k; ++i)
    for (Eigen::Index j = i + 1; j <= k; ++j) log_v += std::log(std::abs(x[i] * x[i] - x[j] * x[j]));
  return std::exp(log_v);
}

numerics::QuadratureEstimate ik_k1(const zonoid::ZonoidModel& model, int n, double rel_tol) {
  const double lower = 1.5 * model.options().boundary_tol;
  numerics::QuadratureOptions o;
  o.rel_tol = rel_tol;
  o.abs_tol = 1e-300;
  auto f = [&](double t) {
    Vector x(2);
    x << std::cos(t), std::sin(t);
    if (t >= kPi / 4) x << 1.0, 1.0;
    const Direction u(x);
    return ik_integrand(u.coords(), zonoid::radial(model, u), n);
  };
  auto e = numerics::gauss_kronrod(f, lower, kPi / 4, o);
  if (!e.converged) throw ConvergenceError("ik_quadrature: outer quadrature did not converge", e.error_bound);
  // the integrand is bounded and nearly constant on the clamped piece [0, lower]
  const double edge = lower * f(lower);
  e.value += edge;
  e.error_bound += 0.5 * edge;
  return e;
}

// ∫ over S²_+ in polar coordinates (ρ, α) at μ: x = cos ρ μ + sin ρ (cos α e1 + sin α e2),
// α ∈ [π/6, π/2], ρ ∈ [0, l(α)], dS = sin ρ dρ dα.
double ik_k2_grid(const zonoid::ZonoidModel& model, int n, int order) {
  const auto gl = numerics::gauss_legendre(static_cast<std::size_t>(order));
  const Vector mu = Direction::mu(2).coords();
  Vector e1(3), e2(3);
  e1 << 1.0, -1.0, 0.0;
  e2 << 1.0, 1.0, -2.0;
  e1 /= std::sqrt(2.0);
  e2 /= std::sqrt(6.0);

  const double a0 = kPi / 6, a1 = kPi / 2;
  double total = 0.0;
  for (std::size_t ia = 0; ia < gl.nodes.size(); ++ia) {
    const double alpha = a0 + 0.5 * (a1 - a0) * (gl.nodes[ia] + 1.0);
    const Vector v = std::cos(alpha) * e1 + std::sin(alpha) * e2;
    const double l = zonoid::exit_distance(v);
    std::optional<Vector> warm;
    double ray = 0.0;
    for (std::size_t ir = 0; ir < gl.nodes.size(); ++ir) {
      const double rho = 0.5 * l * (gl.nodes[ir] + 1.0);
      const Direction u(std::cos(rho) * mu + std::sin(rho) * v);
      zonoid::RadialSolution s;
      try {
        s = zonoid::radial_solve(model, u, warm);
      } catch (const ConvergenceError&) {
        if (!warm) throw;
        s = zonoid::radial_solve(model, u);
      }
      warm = s.preimage;
      ray += gl.weights[ir] * std::sin(rho) * ik_integrand(u.coords(), s.value, n);
    }
    total += gl.weights[ia] * 0.5 * l * ray;
  }
  return 0.5 * (a1 - a0) * total;
}

}  // namespace

numerics::QuadratureEstimate ik_quadrature(const zonoid::ZonoidModel& model, int n, double rel_tol, int grid_order) {
  const int k = model.k();
  if (k < 1 || k > 2) throw Unsupported("ik_quadrature: only k = 1 and k = 2 are implemented");
  if (n < 2 * k + 1) throw std::domain_error("ik_quadrature: need n >= 2k+1");
  if (k == 1) return ik_k1(model, n, rel_tol);
  if (grid_order < 4) throw std::invalid_argument("ik_quadrature: grid order too small");
  numerics::QuadratureEstimate e;
  e.value = ik_k2_grid(model, n, grid_order);
  // difference to a two-thirds grid as the error estimate
  const double coarse = ik_k2_grid(model, n, (2 * grid_order) / 3);
  e.error_bound = std::abs(e.value - coarse);
  e.evaluations = static_cast<std::size_t>(grid_order) * grid_order +
                  static_cast<std::size_t>((2 * grid_order) / 3) * ((2 * grid_order) / 3);
  e.converged = e.error_bound <= std::max(rel_tol, 1e-6) * std::abs(e.value);
  return e;
}

numerics::QuadratureEstimate ik_quadrature(int k, int n, double rel_tol, int grid_order) {
  if (k < 1 || k > 2) throw Unsupported("ik_quadrature: only k = 1 and k = 2 are implemented");
  return ik_quadrature(zonoid::ZonoidModel(k), n, rel_tol, grid_order);
}

}  // namespace edeg
