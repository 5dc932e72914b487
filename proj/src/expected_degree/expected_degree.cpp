#include "edeg/expected_degree.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "edeg/asymptotics.hpp"
#include "edeg/errors.hpp"
#include "edeg/numerics/gamma.hpp"

namespace edeg {
namespace {

constexpr double kPi = std::numbers::pi;

void require_n3(int n, const char* who) {
  if (n < 3) throw std::domain_error(std::string(who) + ": need n >= 3");
}

numerics::QuadratureOptions outer_options(double rel_tol) {
  numerics::QuadratureOptions o;
  o.rel_tol = rel_tol;
  o.abs_tol = 1e-300;
  return o;
}

void require_converged(const numerics::QuadratureEstimate& e, const char* who) {
  if (!e.converged) {
    std::ostringstream msg;
    msg << who << ": outer quadrature did not converge (error estimate " << e.error_bound << ")";
    throw ConvergenceError(msg.str(), e.error_bound);
  }
}

// First and second partials of the k = 1 support function
//   h(x, y) = (1/π) ∫₀^{π/2} √(x² cos²θ + y² sin²θ) dθ.
struct Partials {
  double hx, hy, hxx, hxy, hyy;
};

Partials support_partials(double x, double y) {
  numerics::QuadratureOptions o;
  o.rel_tol = 1e-13;
  o.abs_tol = 1e-300;
  const double a = x * x, b = y * y;
  std::array<double, 5> out{};
  // After θ ↦ π/2 − θ, Q = x² sin²θ + y² cos²θ (sharp near 0 when y << x).
  // 0: s²/√Q, 1: c²/√Q, 2: c²s²/Q^{3/2}; the rest follow by scaling.
  for (int j = 0; j < 3; ++j) {
    const auto e = numerics::gauss_kronrod(
        [a, b, j](double t) {
          const double c2 = std::cos(t) * std::cos(t), s2 = std::sin(t) * std::sin(t);
          const double q = a * s2 + b * c2;
          if (j == 0) return s2 / std::sqrt(q);
          if (j == 1) return c2 / std::sqrt(q);
          return c2 * s2 / (q * std::sqrt(q));
        },
        0.0, kPi / 2, o);
    if (!e.converged) throw ConvergenceError("support_partials: quadrature did not converge", e.error_bound);
    out[static_cast<std::size_t>(j)] = e.value / kPi;
  }
  return {x * out[0], y * out[1], b * out[2], -x * y * out[2], a * out[2]};
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::LineIntegral: return "line-integral";
    case Method::ThetaIntegral: return "theta-integral";
    case Method::ZonoidQuadrature: return "zonoid-quadrature";
    case Method::Asymptotic: return "asymptotic";
    case Method::MonteCarlo: return "monte-carlo";
  }
  return "unknown";
}

Method parse_method(std::string_view tag) {
  for (Method m : {Method::LineIntegral, Method::ThetaIntegral, Method::ZonoidQuadrature, Method::Asymptotic,
                   Method::MonteCarlo})
    if (to_string(m) == tag) return m;
  throw std::invalid_argument("unknown method tag '" + std::string(tag) + "'");
}

double log_c_coefficient(int n) {
  require_n3(n, "c_coefficient");
  return numerics::log_gamma(2.0 * n - 2) - numerics::log_gamma(n) - numerics::log_gamma(n - 2.0);
}

double c_coefficient(int n) { return std::exp(log_c_coefficient(n)); }

EdegResult delta1_line_integral(int n, double rel_tol) {
  require_n3(n, "delta1_line_integral");
  const auto e = numerics::gauss_kronrod(
      [n](double u) {
        const double f = f_elliptic(u), g = g_elliptic(u);
        const double fp = f_elliptic_derivative(u), gp = g_elliptic_derivative(u);
        return std::pow(f * g, n - 3) * (g * g - f * f) * (fp * g - f * gp);
      },
      0.0, 1.0, outer_options(rel_tol));
  require_converged(e, "delta1_line_integral");
  const double c = c_coefficient(n);
  EdegResult r;
  r.value = c * e.value;
  r.method = Method::LineIntegral;
  r.error_bound = c * e.error_bound;
  r.k = 1;
  r.n = n;
  r.tolerance = rel_tol;
  r.extra["evaluations"] = static_cast<double>(e.evaluations);
  return r;
}

EdegResult delta1_theta_integral(int n, double rel_tol) {
  require_n3(n, "delta1_theta_integral");
  const auto e = numerics::gauss_kronrod(
      [n](double t) {
        const double c = std::cos(t), s = std::sin(t);
        const Partials d = support_partials(c, s);
        const double p = d.hy, q = d.hx;
        const double dp = -s * d.hxy + c * d.hyy;
        const double dq = -s * d.hxx + c * d.hxy;
        return std::pow(p * q, n - 3) * (q * q - p * p) * (dp * q - p * dq);
      },
      0.0, kPi / 4, outer_options(rel_tol));
  require_converged(e, "delta1_theta_integral");
  const double scale = std::exp((2.0 * n - 2) * std::log(kPi) + log_c_coefficient(n));
  EdegResult r;
  r.value = scale * e.value;
  r.method = Method::ThetaIntegral;
  r.error_bound = scale * e.error_bound;
  r.k = 1;
  r.n = n;
  r.tolerance = rel_tol;
  r.extra["evaluations"] = static_cast<double>(e.evaluations);
  return r;
}

double grassmannian_log_volume(int k, int n) {
  if (k < 0 || n <= k) throw std::domain_error("grassmannian_log_volume: need 0 <= k < n");
  double v = 0.5 * (k + 1) * (n - k) * std::log(kPi);
  for (int i = 1; i <= k + 1; ++i) v += numerics::log_gamma(i / 2.0) - numerics::log_gamma((n - k + i) / 2.0);
  return v;
}

double ik_asymptotic(int k, int n, double lambda) {
  if (k < 1 || n < 2 * k + 1) throw std::domain_error("ik_asymptotic: need k >= 1 and n >= 2k+1");
  if (!(lambda > 0.0)) throw std::domain_error("ik_asymptotic: lambda must be positive");
  const double kk = k, K = kk * (kk + 1) / 2;
  const double R = zonoid::radial_max_closed_form(k);
  const double log_v = std::log(lambda) + 0.5 * (K - kk) * std::log(2.0) +
                       0.5 * ((kk + 1) * (kk + 1) - K + 1) * std::log(kk + 1) -
                       0.5 * (K + kk) * std::log(kk + 2) +
                       (n - kk) * (kk + 1) * std::log(R / std::sqrt(kk + 1)) -
                       0.5 * (K + kk) * std::log(static_cast<double>(n));
  return std::exp(log_v);
}

double ik_asymptotic(int k, int n) { return ik_asymptotic(k, n, asymptotics::lambda_value(k)); }

EdegResult delta_real(int k, int n, Method method, double rel_tol) {
  if (k < 0 || n <= k) throw std::domain_error("delta_real: need 0 <= k < n");
  EdegResult r;
  r.k = k;
  r.n = n;
  r.method = method;
  r.tolerance = rel_tol;
  if (k == 0) {
    r.value = 1.0;
    return r;
  }
  auto unsupported = [&] {
    std::ostringstream msg;
    msg << "delta_real: method " << to_string(method) << " is not available for k = " << k
        << " (line-integral and theta-integral: k = 1; zonoid-quadrature: k = 1, 2; asymptotic: any k;"
        << " monte-carlo: use the mc command, k = 1, n = 3)";
    return Unsupported(msg.str());
  };
  switch (method) {
    case Method::LineIntegral:
      if (k != 1) throw unsupported();
      return delta1_line_integral(n, rel_tol);
    case Method::ThetaIntegral:
      if (k != 1) throw unsupported();
      return delta1_theta_integral(n, rel_tol);
    case Method::ZonoidQuadrature: {
      if (k > 2) throw unsupported();
      const auto e = ik_quadrature(k, n, rel_tol);
      const double beta = std::exp(asymptotics::log_beta(k, n));
      r.value = beta * e.value;
      r.error_bound = beta * e.error_bound;
      r.extra["ik"] = e.value;
      r.extra["log_beta"] = std::log(beta);
      return r;
    }
    case Method::Asymptotic:
      r.value = asymptotics::delta_real_asymptotic(k, n);
      r.error_bound = std::abs(r.value) / n;  // leading order, relative O(1/n)
      return r;
    case Method::MonteCarlo:
      throw unsupported();
  }
  throw unsupported();
}

}  // namespace edeg
