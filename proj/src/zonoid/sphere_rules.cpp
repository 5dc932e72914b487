#include <cmath>
#include <numbers>
#include <stdexcept>

#include "edeg/numerics/gamma.hpp"
#include "edeg/numerics/quadrature.hpp"
#include "edeg/zonoid.hpp"

namespace edeg::zonoid {

OrthantRule::OrthantRule(int k, int order) : k_(k) {
  if (k < 1 || order < 2) throw std::invalid_argument("OrthantRule: need k >= 1 and order >= 2");
  const auto gl = numerics::gauss_legendre(static_cast<std::size_t>(order));
  constexpr double half = std::numbers::pi / 4.0;  // [-1,1] -> [0, π/2]
  std::vector<double> angle(gl.nodes.size()), weight(gl.nodes.size());
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    angle[i] = half * (gl.nodes[i] + 1.0);
    weight[i] = half * gl.weights[i];
  }

  Eigen::Index total = 1;
  for (int d = 0; d < k; ++d) total *= order;
  squares_.resize(k + 1, total);
  weights_.resize(total);

  // ξ_1 = cos φ_1, ξ_2 = sin φ_1 cos φ_2, …, ξ_{k+1} = sin φ_1 ⋯ sin φ_k;
  // dS = sin^{k-1} φ_1 sin^{k-2} φ_2 ⋯ sin φ_{k-1} dφ.
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  for (Eigen::Index n = 0; n < total; ++n) {
    double w = 1.0, tail = 1.0;
    for (int d = 0; d < k; ++d) {
      const double phi = angle[static_cast<std::size_t>(idx[d])];
      const double c = std::cos(phi), s = std::sin(phi);
      w *= weight[static_cast<std::size_t>(idx[d])] * std::pow(s, k - 1 - d);
      squares_(d, n) = tail * tail * c * c;
      tail *= s;
    }
    squares_(k, n) = tail * tail;
    weights_[n] = w;
    for (int d = k - 1; d >= 0; --d) {
      if (++idx[d] < order) break;
      idx[d] = 0;
    }
  }
}

double OrthantRule::monomial(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != k_ + 1)
    throw std::invalid_argument("OrthantRule::monomial: need k+1 exponents");
  for (int e : exponents)
    if (e < 0 || e % 2 != 0) throw std::invalid_argument("OrthantRule::monomial: exponents must be even and >= 0");
  double sum = 0.0;
  for (Eigen::Index n = 0; n < size(); ++n) {
    double term = weights_[n];
    for (int j = 0; j <= k_; ++j) term *= std::pow(squares_(j, n), exponents[static_cast<std::size_t>(j)] / 2);
    sum += term;
  }
  return sum;
}

double sphere_moment(int k, int m) {
  if (k < 1 || m < 0) throw std::invalid_argument("sphere_moment: need k >= 1, m >= 0");
  return std::pow(std::numbers::pi, k / 2.0) / std::ldexp(1.0, k) *
         numerics::gamma_ratio((m + 1) / 2.0, 0.0, k / 2.0);
}

double sphere_moment_quadrature(int k, std::span<const int> exponents, int order) {
  return OrthantRule(k, order).monomial(exponents);
}

}  // namespace edeg::zonoid
