#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "edeg/asymptotics.hpp"

namespace edeg::asymptotics {

MonicDepressedPolynomial::MonicDepressedPolynomial(std::vector<double> a) : a_(std::move(a)) {
  if (a_.empty()) throw std::invalid_argument("MonicDepressedPolynomial: need k >= 1 coefficients");
  for (double c : a_)
    if (!std::isfinite(c)) throw std::invalid_argument("MonicDepressedPolynomial: non-finite coefficient");
}

MonicDepressedPolynomial MonicDepressedPolynomial::from_roots(std::span<const double> roots) {
  if (roots.size() < 2) throw std::invalid_argument("from_roots: need at least two roots");
  double sum = 0.0, scale = 0.0;
  for (double r : roots) {
    sum += r;
    scale = std::max(scale, std::abs(r));
  }
  if (std::abs(sum) > 1e-12 * std::max(scale, 1.0))
    throw std::invalid_argument("from_roots: roots must sum to zero");
  // Elementary symmetric functions by the product recurrence.
  std::vector<double> e(roots.size() + 1, 0.0);
  e[0] = 1.0;
  for (double r : roots)
    for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += r * e[j - 1];
  return MonicDepressedPolynomial(std::vector<double>(e.begin() + 2, e.end()));
}

std::vector<double> MonicDepressedPolynomial::descending() const {
  const int k = this->k();
  std::vector<double> c(static_cast<std::size_t>(k) + 2, 0.0);
  c[0] = 1.0;
  for (int i = 1; i <= k; ++i) c[static_cast<std::size_t>(i) + 1] = (i % 2 == 1 ? 1.0 : -1.0) * a_[i - 1];
  return c;
}

double MonicDepressedPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (double c : descending()) acc = acc * x + c;
  return acc;
}

namespace {

using Rational = boost::multiprecision::cpp_rational;

template <class T>
using Poly = std::vector<T>;  // descending coefficients, leading entry nonzero

template <class T>
bool is_zero(const T& x, const T& tol) {
  using std::abs;
  return abs(x) <= tol;
}

/// Remainder of num / den (both descending, den leading coefficient nonzero).
template <class T>
Poly<T> remainder(Poly<T> num, const Poly<T>& den) {
  while (num.size() >= den.size()) {
    const T factor = num.front() / den.front();
    for (std::size_t i = 0; i < den.size(); ++i) num[i] -= factor * den[i];
    num.erase(num.begin());
  }
  return num;
}

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  Poly<T> d;
  const std::size_t deg = p.size() - 1;
  for (std::size_t i = 0; i < deg; ++i) d.push_back(p[i] * T(static_cast<long>(deg - i)));
  return d;
}

template <class T>
int sign(const T& x) {
  return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

int sign_changes(const std::vector<int>& s) {
  int changes = 0, last = 0;
  for (int v : s) {
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

/// Sturm chain. Coefficients with magnitude <= tol * (dividend scale) are
/// dropped; any such drop sets `boundary`. Exact arithmetic passes tol = 0.
template <class T>
RootReality sturm_decide(const Poly<T>& p, const T& tol) {
  using std::abs;
  RootReality out;
  std::vector<Poly<T>> chain{p, derivative(p)};
  while (chain.back().size() > 1) {
    const Poly<T>& prev = chain[chain.size() - 2];
    T scale = T(0);
    for (const auto& c : prev) scale = std::max<T>(scale, abs(c));
    Poly<T> r = remainder(prev, chain.back());
    const T cut = tol * scale;
    while (!r.empty() && is_zero(r.front(), cut)) {
      if (r.front() != T(0)) out.boundary = true;
      r.erase(r.begin());
    }
    if (r.empty()) break;  // chain.back() is gcd(p, p')
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  const std::size_t deg = p.size() - 1;
  const std::size_t gcd_deg = chain.back().size() - 1;
  if (gcd_deg > 0) out.boundary = true;

  std::vector<int> at_pos, at_neg;
  for (const auto& q : chain) {
    const int lead = sign(q.front());
    const std::size_t d = q.size() - 1;
    at_pos.push_back(lead);
    at_neg.push_back(d % 2 == 0 ? lead : -lead);
  }
  const int distinct_real = sign_changes(at_neg) - sign_changes(at_pos);
  const int distinct = static_cast<int>(deg - gcd_deg);
  out.all_real = distinct_real == distinct;
  return out;
}

Rational exact_rational(double x) {
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  const auto m = static_cast<long long>(std::ldexp(mant, 53));
  Rational r(m);
  const int shift = exp - 53;
  boost::multiprecision::cpp_int pow2 = 1;
  pow2 <<= std::abs(shift);
  if (shift >= 0)
    r *= Rational(pow2);
  else
    r /= Rational(pow2);
  return r;
}

}  // namespace

RootReality all_roots_real(const MonicDepressedPolynomial& p, double tol) {
  const auto a = p.coefficients();
  const int k = p.k();
  if (k == 1) {
    // X² + a_1
    return {a[0] <= std::abs(tol), std::abs(a[0]) <= std::abs(tol)};
  }
  if (k == 2) {
    // X³ + a_1 X − a_2 : Δ = −4a_1³ − 27a_2²
    const double disc = -4.0 * a[0] * a[0] * a[0] - 27.0 * a[1] * a[1];
    const double scale = 4.0 * std::abs(a[0] * a[0] * a[0]) + 27.0 * a[1] * a[1];
    const bool boundary = std::abs(disc) <= tol * scale;
    return {disc >= 0.0 || boundary, boundary};
  }
  // Scale X = s Y so that every coefficient of the Y-polynomial is <= 1 in magnitude.
  std::vector<double> c = p.descending();
  double s = 0.0;
  for (std::size_t j = 1; j < c.size(); ++j)
    if (c[j] != 0.0) s = std::max(s, std::pow(std::abs(c[j]), 1.0 / static_cast<double>(j)));
  if (s == 0.0) return {true, true};  // X^{k+1}
  double sj = 1.0;
  for (std::size_t j = 1; j < c.size(); ++j) {
    sj *= s;
    c[j] /= sj;
  }
  return sturm_decide<double>(c, tol);
}

RootReality all_roots_real_exact(const MonicDepressedPolynomial& p) {
  Poly<Rational> c;
  for (double v : p.descending()) c.push_back(exact_rational(v));
  return sturm_decide<Rational>(c, Rational(0));
}

}  // namespace edeg::asymptotics
