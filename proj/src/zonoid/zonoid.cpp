#include "edeg/zonoid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "edeg/errors.hpp"
#include "edeg/numerics/gamma.hpp"
#include "edeg/numerics/quadrature.hpp"

namespace edeg::zonoid {
namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(const Vector& x, const char* who) {
  if (!x.allFinite()) throw std::invalid_argument(std::string(who) + ": non-finite input");
}

int default_order(int k) {
  if (k <= 3) return 64;
  return 24;
}

numerics::QuadratureOptions inner_options(const ZonoidOptions& o) {
  numerics::QuadratureOptions q;
  q.rel_tol = o.quad_rel_tol;
  q.abs_tol = 1e-300;
  return q;
}

double checked(const numerics::QuadratureEstimate& e, const char* who) {
  if (!e.converged) {
    std::ostringstream msg;
    msg << who << ": inner quadrature did not converge (error estimate " << e.error_bound << ")";
    throw ConvergenceError(msg.str(), e.error_bound);
  }
  return e.value;
}

Vector normalized(const Vector& x) {
  const double n = x.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw std::domain_error("cannot normalize a zero or non-finite vector");
  return x / n;
}

}  // namespace

Direction::Direction(Vector x) {
  require_finite(x, "Direction");
  if (x.size() < 2) throw std::invalid_argument("Direction: need at least two coordinates");
  x_ = normalized(x);
}

Direction Direction::mu(int k) {
  if (k < 1) throw std::invalid_argument("Direction::mu: need k >= 1");
  return Direction(Vector::Ones(k + 1));
}

double radial_max_closed_form(int k) {
  if (k < 1) throw std::invalid_argument("radial_max_closed_form: need k >= 1");
  return numerics::gamma_ratio(0.5, (k + 1) / 2.0, k / 2.0) / std::sqrt(kPi * (k + 1));
}

ZonoidModel::ZonoidModel(int k, ZonoidOptions options) : k_(k), options_(options) {
  if (k < 1) throw std::invalid_argument("ZonoidModel: need k >= 1");
  if (options_.orthant_order == 0) options_.orthant_order = default_order(k);
  prefactor_ = std::ldexp(1.0, k) * std::exp(numerics::log_gamma((k + 2) / 2.0) - (k + 2) / 2.0 * std::log(kPi));
  radial_max_ = radial_max_closed_form(k);
  if (k >= 2) rule_.emplace(k, options_.orthant_order);
  radial_scale_ = radial_max_ / support_gradient(Direction::mu(k).coords()).norm();
}

double ZonoidModel::support(const Vector& x) const {
  require_finite(x, "support");
  if (x.size() != k_ + 1) throw std::invalid_argument("support: dimension mismatch");
  if (k_ == 1) {
    // h is unchanged by θ ↦ π/2 − θ; the larger weight goes on sin² so the
    // kink of width ~min/max sits at θ = 0.
    const double a = std::max(x[0] * x[0], x[1] * x[1]), b = std::min(x[0] * x[0], x[1] * x[1]);
    const auto e = numerics::gauss_kronrod(
        [a, b](double t) {
          const double c = std::cos(t), s = std::sin(t);
          return std::sqrt(a * s * s + b * c * c);
        },
        0.0, kPi / 2, inner_options(options_));
    return prefactor_ * checked(e, "support");
  }
  const Matrix& sq = rule_->squares();
  const Vector& w = rule_->weights();
  const Vector x2 = x.array().square();
  double sum = 0.0;
  for (Eigen::Index n = 0; n < w.size(); ++n) sum += w[n] * std::sqrt(x2.dot(sq.col(n)));
  return prefactor_ * sum;
}

Vector ZonoidModel::support_gradient(const Vector& x) const {
  require_finite(x, "support_gradient");
  if (x.size() != k_ + 1) throw std::invalid_argument("support_gradient: dimension mismatch");
  Vector g(k_ + 1);
  if (k_ == 1) {
    // same orientation as support(): the larger coordinate pairs with sin²
    const int big = std::abs(x[0]) >= std::abs(x[1]) ? 0 : 1;
    const double a = x[big] * x[big], b = x[1 - big] * x[1 - big];
    for (int i = 0; i < 2; ++i) {
      const bool with_sin = (i == big);
      const auto e = numerics::gauss_kronrod(
          [a, b, with_sin](double t) {
            const double c2 = std::cos(t) * std::cos(t), s2 = std::sin(t) * std::sin(t);
            const double q = std::sqrt(a * s2 + b * c2);
            return q > 0.0 ? (with_sin ? s2 : c2) / q : 0.0;
          },
          0.0, kPi / 2, inner_options(options_));
      g[i] = prefactor_ * x[i] * checked(e, "support_gradient");
    }
    return g;
  }
  const Matrix& sq = rule_->squares();
  const Vector& w = rule_->weights();
  const Vector x2 = x.array().square();
  g.setZero();
  for (Eigen::Index n = 0; n < w.size(); ++n) {
    const double q = std::sqrt(x2.dot(sq.col(n)));
    if (q > 0.0) g.noalias() += (w[n] / q) * sq.col(n);
  }
  return prefactor_ * g.cwiseProduct(x);
}

double support(const ZonoidModel& model, const Vector& x) { return model.support(x); }

Vector support_gradient(const ZonoidModel& model, const Vector& x) { return model.support_gradient(x); }

Direction psi(const ZonoidModel& model, const Direction& x) {
  return Direction(model.support_gradient(x.coords()));
}

Matrix tangent_basis(const Vector& x) {
  const Eigen::Index d = x.size();
  Eigen::HouseholderQR<Matrix> qr(x);
  const Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  return q.rightCols(d - 1);
}

RadialSolution radial_solve(const ZonoidModel& model, const Direction& u_in, const std::optional<Vector>& initial) {
  const int k = model.k();
  if (u_in.k() != k) throw std::invalid_argument("radial: dimension mismatch");
  const ZonoidOptions& opt = model.options();
  const Vector u = u_in.coords().cwiseAbs();
  if (u.minCoeff() < opt.boundary_tol) {
    std::ostringstream msg;
    msg << "radial: direction within " << opt.boundary_tol << " of the boundary (min coordinate " << u.minCoeff()
        << ")";
    throw std::domain_error(msg.str());
  }

  auto psi_of = [&](const Vector& y) { return normalized(model.support_gradient(y)); };

  Vector y = initial ? normalized(initial->cwiseAbs()) : u;
  Vector g = psi_of(y);
  double res = (g - u).norm();
  int it = 0;
  for (; res > opt.newton_tol; ++it) {
    if (it >= opt.newton_max_iter) {
      std::ostringstream msg;
      msg << "radial: Newton did not converge in " << opt.newton_max_iter << " iterations at u = ["
          << u.transpose() << "], residual " << res;
      throw ConvergenceError(msg.str(), res);
    }
    const Matrix E = tangent_basis(y);
    const double h = std::min(opt.fd_step, 0.01 * y.minCoeff());
    Matrix J(k + 1, k);
    for (int j = 0; j < k; ++j)
      J.col(j) = (psi_of(normalized(y + h * E.col(j))) - psi_of(normalized(y - h * E.col(j)))) / (2 * h);
    const Vector step = E * J.colPivHouseholderQr().solve(u - g);

    bool accepted = false;
    for (double lambda = 1.0; lambda > 1e-12; lambda *= 0.5) {
      const Vector trial = normalized(y + lambda * step);
      if (trial.minCoeff() <= 0.0) continue;
      const Vector gt = psi_of(trial);
      const double rt = (gt - u).norm();
      if (rt < res) {
        y = trial, g = gt, res = rt;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (res <= 100 * opt.newton_tol) break;  // at the noise floor of the inner quadrature
      std::ostringstream msg;
      msg << "radial: line search stalled at u = [" << u.transpose() << "], residual " << res;
      throw ConvergenceError(msg.str(), res);
    }
  }
  RadialSolution out;
  out.value = model.radial_scale() * model.support_gradient(y).norm();
  out.preimage = y;
  out.iterations = it;
  out.residual = res;
  return out;
}

double radial(const ZonoidModel& model, const Direction& u) { return radial_solve(model, u).value; }

Direction exp_map(const Direction& base, const Vector& tangent) {
  require_finite(tangent, "exp_map");
  const double t = tangent.norm();
  if (t == 0.0) return base;
  return Direction(std::cos(t) * base.coords() + std::sin(t) / t * tangent);
}

double exit_distance(const Vector& v) {
  require_finite(v, "exit_distance");
  const Eigen::Index d = v.size();
  const double n = v.norm();
  if (!(n > 0.0)) throw std::invalid_argument("exit_distance: zero tangent");
  const double vmin = v.minCoeff() / n;
  if (vmin >= 0.0) throw std::invalid_argument("exit_distance: tangent is not orthogonal to mu");
  return std::atan(1.0 / (std::sqrt(static_cast<double>(d)) * -vmin));
}

double inradius(int k) {
  if (k < 1) throw std::invalid_argument("inradius: need k >= 1");
  return std::atan(1.0 / std::sqrt(static_cast<double>(k)));
}

double nearest_vertex_angle(int k) {
  if (k < 1) throw std::invalid_argument("nearest_vertex_angle: need k >= 1");
  Vector alpha = Vector::Ones(k + 1);
  alpha[k] = 0.0;
  alpha.normalize();
  const Vector mu = Direction::mu(k).coords();
  // atan2 of the sine and cosine components is accurate for small angles too
  const double c = alpha.dot(mu);
  const double s = (alpha - c * mu).norm();
  return std::atan2(s, c);
}

Vector psi_differential(const ZonoidModel& model, const Direction& base, const Vector& tangent, double step) {
  const Vector plus = psi(model, exp_map(base, step * tangent)).coords();
  const Vector minus = psi(model, exp_map(base, -step * tangent)).coords();
  return (plus - minus) / (2 * step);
}

Vector gradient_differential(const ZonoidModel& model, const Direction& base, const Vector& tangent, double step) {
  const Vector plus = model.support_gradient(exp_map(base, step * tangent).coords());
  const Vector minus = model.support_gradient(exp_map(base, -step * tangent).coords());
  return (plus - minus) / (2 * step);
}

double radial_squared_second_derivative(const ZonoidModel& model, const Vector& tangent, double step) {
  const Direction mu = Direction::mu(model.k());
  auto r2 = [&](double t) {
    const double r = radial(model, exp_map(mu, t * tangent));
    return r * r;
  };
  return (r2(step) - 2 * r2(0.0) + r2(-step)) / (step * step);
}

double psi_eigenvalue(int k) { return (k + 1.0) / (k + 3.0); }

}  // namespace edeg::zonoid
