#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "edeg/numerics/quadrature.hpp"
#include "edeg/zonoid.hpp"

namespace edeg {

enum class Method { LineIntegral, ThetaIntegral, ZonoidQuadrature, Asymptotic, MonteCarlo };

std::string_view to_string(Method m);
/// Accepts the hyphenated tags ("line-integral", …). Throws std::invalid_argument.
Method parse_method(std::string_view tag);

struct EdegResult {
  double value = 0.0;
  Method method = Method::LineIntegral;
  double error_bound = 0.0;
  int k = 0;
  int n = 0;
  double tolerance = 0.0;
  std::optional<std::uint64_t> seed;
  std::map<std::string, double> extra;  // method-specific diagnostics
};

// --- The k = 1 elliptic functions -----------------------------------------
//   F(u) = ∫₀^{π/2} u sin²θ / √(cos²θ + u² sin²θ) dθ
//   G(u) = ∫₀^{π/2} sin²θ / √(sin²θ + u² cos²θ) dθ
// evaluated by adaptive quadrature, derivatives by differentiating under the
// integral sign. Domain u ∈ [0, 1].

double f_elliptic(double u);
double g_elliptic(double u);
double f_elliptic_derivative(double u);
double g_elliptic_derivative(double u);

/// c(n) = Γ(2n−2) / (Γ(n) Γ(n−2)), n >= 3.
double c_coefficient(int n);
double log_c_coefficient(int n);

/// δ_{1,n} = c(n) ∫₀¹ (FG)^{n−3} (G² − F²)(F′G − FG′) du, n >= 3.
EdegResult delta1_line_integral(int n, double rel_tol = 1e-10);

/// δ_{1,n} = π^{2n−2} c(n) ∫₀^{π/4} (pq)^{n−3} (q² − p²)(p′q − pq′) dt with
/// p(t) = h_y(cos t, sin t), q(t) = h_x(cos t, sin t) and h the k = 1 support
/// function; p′, q′ come from the second partials of h.
EdegResult delta1_theta_integral(int n, double rel_tol = 1e-10);

/// ln |G(k,n)| = ln(π^{(k+1)(n−k)/2} Π_{i=1}^{k+1} Γ(i/2)/Γ((n−k+i)/2)).
double grassmannian_log_volume(int k, int n);

/// I_k(n) = ∫_{S^k_+} (p_k r^{k+1})^{n−k} q_k dS^k for k ∈ {1, 2}, n >= 2k+1,
/// with p_k = Π x_i and q_k = p_k^{−(k+1)} Π_{i<j} |x_i² − x_j²|.
/// k = 1: adaptive rule in θ; k = 2: polar Gauss grid (order × order) in
/// exponential coordinates at μ covering the whole spherical triangle.
numerics::QuadratureEstimate ik_quadrature(int k, int n, double rel_tol = 1e-10, int grid_order = 96);
numerics::QuadratureEstimate ik_quadrature(const zonoid::ZonoidModel& model, int n, double rel_tol = 1e-10,
                                           int grid_order = 96);

/// Leading-order asymptote of I_k(n) with Λ_k supplied or taken from
/// asymptotics::lambda_value.
double ik_asymptotic(int k, int n, double lambda);
double ik_asymptotic(int k, int n);

/// δ_{k,n} by the requested method. k = 0 returns 1 for every method.
/// Supported: line-integral and theta-integral (k = 1), zonoid-quadrature
/// (k ∈ {1, 2}), asymptotic (k >= 1). Monte Carlo lives in mc_schubert.
/// Other combinations throw edeg::Unsupported.
EdegResult delta_real(int k, int n, Method method, double rel_tol = 1e-10);

}  // namespace edeg
