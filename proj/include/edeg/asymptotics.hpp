#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edeg/numerics/monte_carlo.hpp"

namespace edeg::asymptotics {

using numerics::MonteCarloEstimate;

/// p_a(X) = X^{k+1} + a_1 X^{k−1} − a_2 X^{k−2} + a_3 X^{k−3} − ⋯
/// i.e. the coefficient of X^{k−i} is (−1)^{i+1} a_i, so a_i = σ_{i+1}(roots).
/// There is no X^k term.
class MonicDepressedPolynomial {
 public:
  explicit MonicDepressedPolynomial(std::vector<double> a);

  /// Polynomial with the given roots; the roots must sum to zero (checked to 1e-12 relative).
  static MonicDepressedPolynomial from_roots(std::span<const double> roots);

  int k() const noexcept { return static_cast<int>(a_.size()); }
  std::span<const double> coefficients() const noexcept { return a_; }

  /// All k+2 coefficients, highest degree first.
  std::vector<double> descending() const;

  double operator()(double x) const;

 private:
  std::vector<double> a_;
};

struct RootReality {
  bool all_real = false;
  bool boundary = false;  // repeated root / discriminant within tolerance of 0
};

/// Floating-point decision. k <= 2 uses the discriminant; larger k a Sturm
/// sequence on the root-bound-scaled polynomial. Remainders whose
/// coefficients are all below tol (relative) are treated as zero and flag
/// the boundary.
RootReality all_roots_real(const MonicDepressedPolynomial& p, double tol = 1e-12);

/// Exact decision: Sturm sequence over the rationals (doubles are dyadic
/// rationals, so the input is represented exactly).
RootReality all_roots_real_exact(const MonicDepressedPolynomial& p);

/// Λ_1 = 1, Λ_2 = √(π/3). Throws edeg::Unsupported for other k.
double lambda_closed(int k);

/// Largest k accepted by lambda_mc_coefficient.
inline constexpr int kMaxCoefficientLambdaK = 4;

/// Λ_k = ∫_{R_k} e^{a_1} da by importance sampling: a_1 = −Exp(1) cancels the
/// weight, a_i (i >= 2) uniform on [−(2|a_1|)^{(i+1)/2}, (2|a_1|)^{(i+1)/2}].
MonteCarloEstimate lambda_mc_coefficient(int k, std::uint64_t samples, std::uint64_t seed,
                                         unsigned threads = 1);

/// Λ_k as Γ((K+k)/2) 2^{(K+k−2)/2}/√(k+1) times the integral of √Δ over the
/// ordered chamber of the unit sphere of μ^⊥, K = k(k+1)/2.
MonteCarloEstimate lambda_mc_sphere(int k, std::uint64_t samples, std::uint64_t seed,
                                    unsigned threads = 1);

/// Prefactor Γ((K+k)/2) 2^{(K+k−2)/2} / √(k+1) of the sphere representation.
double lambda_sphere_constant(int k);

inline constexpr std::uint64_t kDefaultLambdaSamples = 1'000'000;
inline constexpr std::uint64_t kDefaultLambdaSeed = 20190101;

/// Λ_k: closed form for k <= 2, otherwise a sphere Monte Carlo estimate,
/// computed once per (k, samples, seed) and cached for the process.
double lambda_value(int k, std::uint64_t samples = kDefaultLambdaSamples,
                    std::uint64_t seed = kDefaultLambdaSeed);

double log_b_coefficient(int k);
double b_coefficient(int k);
double log_a_coefficient(int k, double lambda);
double a_coefficient(int k, double lambda);
double a_coefficient(int k);

/// ln β_{k,n} where δ_{k,n} = β_{k,n} I_k(n), β_{k,n} = π^d Γ(d) / Π_{l=0}^{k} Γ(n−2l),
/// d = (k+1)(n−k). Requires k >= 1, n >= 2k+1.
double log_beta(int k, int n);
/// Same quantity from the half-integer Γ product (2π)^{k+1}(π/2)^d π^{−(k+1)/2} Γ(d) / Π_{j=0}^{2k+1} Γ((n+1−j)/2).
double log_beta_half_integer(int k, int n);
/// Leading term (π(k+1))^d n^{k/2} / ((2π)^{k/2} √(k+1)).
double log_beta_asymptotic(int k, int n);

/// ln(a_k b_k^n n^{−k(k+1)/4}); k = 0 gives 0 (δ_{0,n} = 1).
double log_delta_real_asymptotic(int k, int n, double lambda);
double delta_real_asymptotic(int k, int n, double lambda);
double delta_real_asymptotic(int k, int n);

}  // namespace edeg::asymptotics
