#include "edeg/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace edeg::numerics {
namespace {

// QUADPACK qk21 abscissae and weights.
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208745600338, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double kWg[5] = {0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
                           0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
                           0.295524224714752870173892994651338};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod21(const RealFunction& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = 0.0;
  double resk = kWgk[10] * fc;
  double resabs = std::abs(resk);
  double fv1[10], fv2[10];
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  const double result = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
  return {a, b, result, err};
}

}  // namespace

QuadratureEstimate gauss_kronrod(const RealFunction& f, double a, double b,
                                 const QuadratureOptions& opts) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("gauss_kronrod: finite limits required");
  QuadratureEstimate est;
  if (a == b) {
    est.evaluations = 1;
    return est;
  }
  std::priority_queue<Segment> heap;
  heap.push(kronrod21(f, a, b));
  std::size_t evals = 21;
  double total = heap.top().value;
  double error = heap.top().error;
  int subdivisions = 1;
  bool converged = true;

  // below 100 eps the per-interval roundoff floor of the error estimate dominates
  const double rel_tol = std::max(opts.rel_tol, 100.0 * std::numeric_limits<double>::epsilon());
  while (error > std::max(opts.abs_tol, rel_tol * std::abs(total))) {
    if (subdivisions >= opts.max_subdivisions) {
      converged = false;
      break;
    }
    Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {  // interval exhausted at machine precision
      converged = false;
      break;
    }
    heap.pop();
    const Segment left = kronrod21(f, worst.a, mid);
    const Segment right = kronrod21(f, mid, worst.b);
    evals += 42;
    ++subdivisions;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum in a fixed order so the result does not depend on update history.
  std::vector<Segment> segs;
  segs.reserve(heap.size());
  while (!heap.empty()) {
    segs.push_back(heap.top());
    heap.pop();
  }
  std::sort(segs.begin(), segs.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
  double sum = 0.0, comp = 0.0, err = 0.0;
  for (const auto& s : segs) {
    const double y = s.value - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    err += s.error;
  }
  est.value = sum;
  est.error_bound = err;
  est.evaluations = evals;
  est.converged = converged && std::isfinite(sum);
  return est;
}

QuadratureEstimate tanh_sinh(const RealFunction& f, double a, double b, const QuadratureOptions& opts) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("tanh_sinh: finite limits required");
  QuadratureEstimate est;
  if (a == b) {
    est.evaluations = 1;
    return est;
  }
  constexpr double half_pi = 0.5 * std::numbers::pi;
  constexpr double t_max = 4.5;
  const double half = 0.5 * (b - a);
  const double center = 0.5 * (a + b);
  std::size_t evals = 0;

  // Adds the contribution of the symmetric pair at parameter t (t > 0).
  auto pair = [&](double t) {
    const double s = half_pi * std::sinh(t);
    const double e = std::exp(-2.0 * s);
    const double dist = 2.0 * e / (1.0 + e);  // 1 - tanh(s)
    const double ch = std::cosh(s);
    const double w = half_pi * std::cosh(t) / (ch * ch);
    const double off = half * dist;
    double acc = 0.0;
    const double xl = a + off;
    const double xr = b - off;
    if (xl > a && xl < b) {
      acc += f(xl);
      ++evals;
    }
    if (xr > a && xr < b) {
      acc += f(xr);
      ++evals;
    }
    return w * acc;
  };

  double h = 1.0;
  double sum = half_pi * f(center);
  ++evals;
  for (int j = 1; j * h <= t_max; ++j) sum += pair(j * h);
  double value = half * h * sum;
  double err = std::abs(value);
  bool converged = false;

  for (int level = 1; level <= opts.max_levels; ++level) {
    h *= 0.5;
    double added = 0.0;
    for (int j = 1; j * h <= t_max; j += 2) added += pair(j * h);
    sum += added;
    const double next = half * h * sum;
    err = std::abs(next - value);
    value = next;
    if (level >= 3 && err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value))) {
      converged = true;
      break;
    }
  }
  est.value = value;
  est.error_bound = err;
  est.evaluations = evals;
  est.converged = converged && std::isfinite(value);
  return est;
}

QuadratureEstimate integrate_to_infinity(const RealFunction& f, double a, const QuadratureOptions& opts) {
  auto g = [&](double t) {
    const double s = 1.0 - t;
    return f(a + t / s) / (s * s);
  };
  return gauss_kronrod(g, 0.0, 1.0, opts);
}

QuadratureEstimate adaptive_quad(const RealFunction& f, double a, double b, double rel_tol) {
  QuadratureOptions opts;
  opts.rel_tol = rel_tol;
  return gauss_kronrod(f, a, b, opts);
}

GaussRule gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: n must be positive");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // One more evaluation for the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double kk = static_cast<double>(k);
      const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? 1.0 : static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[m - 1] = 0.0;
  return rule;
}

}  // namespace edeg::numerics
