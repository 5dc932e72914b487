#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace edeg::zonoid {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Unit vector in R^{k+1}; renormalized on construction.
class Direction {
 public:
  explicit Direction(Vector x);
  static Direction mu(int k);  // (1,…,1)/√(k+1)

  int k() const noexcept { return static_cast<int>(x_.size()) - 1; }
  const Vector& coords() const noexcept { return x_; }
  double operator[](Eigen::Index i) const { return x_[i]; }

 private:
  Vector x_;
};

/// Tensor Gauss–Legendre rule on the positive orthant S^k_pos of the unit
/// sphere in hyperspherical angles, every angle in [0, π/2]. Stores ξ_j² at
/// each node (all integrands here are even in every ξ_j).
class OrthantRule {
 public:
  OrthantRule(int k, int order);

  int k() const noexcept { return k_; }
  Eigen::Index size() const noexcept { return weights_.size(); }
  const Matrix& squares() const noexcept { return squares_; }  // (k+1) × N
  const Vector& weights() const noexcept { return weights_; }

  /// ∫_{S^k_pos} Π ξ_j^{e_j} dS for even exponents e_j.
  double monomial(std::span<const int> exponents) const;

 private:
  int k_;
  Matrix squares_;
  Vector weights_;
};

struct ZonoidOptions {
  double quad_rel_tol = 1e-14;  // k = 1 adaptive inner rule
  int orthant_order = 0;        // 0: 64 for k = 2, 40 for k = 3
  double boundary_tol = 1e-8;   // radial() refuses min_i |u_i| below this
  double newton_tol = 1e-12;    // on ‖ψ(y) − u‖
  int newton_max_iter = 100;
  double fd_step = 1e-6;        // central differences for Dψ inside Newton
};

/// Support function h of the body D(k) ⊂ R^{k+1},
///   h(x) = 2^k Γ((k+2)/2) / π^{(k+2)/2} ∫_{S^k_pos} √(Σ x_j² ξ_j²) dS^k(ξ),
/// together with ψ = ∇h/‖∇h‖ and the radial function r = s_k ‖∇h∘ψ⁻¹‖.
/// Immutable after construction; all methods are re-entrant.
class ZonoidModel {
 public:
  explicit ZonoidModel(int k, ZonoidOptions options = {});

  int k() const noexcept { return k_; }
  const ZonoidOptions& options() const noexcept { return options_; }

  /// 2^k Γ((k+2)/2) / π^{(k+2)/2}.
  double prefactor() const noexcept { return prefactor_; }
  /// Closed-form max of r, attained at μ.
  double radial_max() const noexcept { return radial_max_; }
  /// s_k = radial_max / ‖∇h(μ)‖ (equals 1 up to quadrature error).
  double radial_scale() const noexcept { return radial_scale_; }

  double support(const Vector& x) const;
  Vector support_gradient(const Vector& x) const;

 private:
  int k_;
  ZonoidOptions options_;
  double prefactor_;
  double radial_max_;
  double radial_scale_ = 1.0;
  std::optional<OrthantRule> rule_;  // k >= 2
};

double support(const ZonoidModel& model, const Vector& x);
Vector support_gradient(const ZonoidModel& model, const Vector& x);

/// ψ(x) = ∇h(x)/‖∇h(x)‖.
Direction psi(const ZonoidModel& model, const Direction& x);

struct RadialSolution {
  double value = 0.0;        // r(u)
  Vector preimage;           // y with ψ(y) = u
  int iterations = 0;
  double residual = 0.0;     // ‖ψ(y) − u‖
};

/// Solves ψ(y) = u by damped Newton on the sphere (tangent step at y,
/// retraction by normalization, central-difference Jacobian) and returns
/// s_k ‖∇h(y)‖. u may be any direction of the open positive orthant (r is
/// invariant under coordinate permutations and sign changes); directions with
/// min_i |u_i| < boundary_tol throw std::domain_error. Non-convergence throws
/// edeg::ConvergenceError carrying the residual.
RadialSolution radial_solve(const ZonoidModel& model, const Direction& u,
                            const std::optional<Vector>& initial = std::nullopt);
double radial(const ZonoidModel& model, const Direction& u);

/// R = Γ((k+2)/2) / (√π √(k+1) Γ((k+1)/2)).
double radial_max_closed_form(int k);

/// G(m) = ∫_{S^k_pos} ξ_1^m dS^k = π^{k/2}/2^k · Γ((m+1)/2)/Γ((k+m+1)/2).
double sphere_moment(int k, int m);
/// Quadrature cross-check of ∫_{S^k_pos} Π ξ_j^{e_j} dS^k.
double sphere_moment_quadrature(int k, std::span<const int> exponents, int order = 24);

// --- Geometry near μ -------------------------------------------------------

/// Orthonormal basis of x^⊥ (columns), x need not be unit.
Matrix tangent_basis(const Vector& x);

/// exp_base(v) = cos‖v‖ base + sin‖v‖ v/‖v‖ for v ⟂ base.
Direction exp_map(const Direction& base, const Vector& tangent);

/// Geodesic distance from μ to the boundary of S^k_+ along the unit tangent
/// v ∈ μ^⊥ with v_1 >= … >= v_{k+1}: arctan(1/(√(k+1) |v_{k+1}|)).
double exit_distance(const Vector& v);

/// arctan(1/√k): radius of the largest cap around μ inside S^k_+.
double inradius(int k);

/// Angle between μ and the nearest other vertex α_k = (1,…,1,0)/√k.
double nearest_vertex_angle(int k);

/// Central-difference derivative of ψ along the geodesic exp_base(t v) at t = 0.
Vector psi_differential(const ZonoidModel& model, const Direction& base, const Vector& tangent,
                        double step = 1e-5);

/// Central-difference derivative of ∇h along the geodesic exp_base(t v).
Vector gradient_differential(const ZonoidModel& model, const Direction& base, const Vector& tangent,
                             double step = 1e-5);

/// Second derivative of r² along exp_μ(t v), t = 0, by central differences.
double radial_squared_second_derivative(const ZonoidModel& model, const Vector& tangent,
                                        double step = 1e-3);

/// (k+1)/(k+3), the eigenvalue of Dψ at μ.
double psi_eigenvalue(int k);

}  // namespace edeg::zonoid
