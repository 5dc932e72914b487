#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "edeg/errors.hpp"
#include "edeg/expected_degree.hpp"
#include "edeg/schubert.hpp"

using namespace edeg;
using namespace edeg::schubert;

namespace {

// Lines of the two rulings of x0 x3 = x1 x2, i.e. points (s u, s v, t u, t v).
// A line of the first ruling fixes [u : v] and varies [s : t].
ProjectiveLine ruling_line(double u, double v) {
  Frame f;
  f << u, 0, v, 0, 0, u, 0, v;
  return ProjectiveLine(f);
}
ProjectiveLine other_ruling_line(double s, double t) {
  Frame f;
  f << s, 0, 0, s, t, 0, 0, t;
  return ProjectiveLine(f);
}

Matrix4 standard_quadric() {
  Matrix4 q = Matrix4::Zero();
  q(0, 3) = q(3, 0) = 0.5;
  q(1, 2) = q(2, 1) = -0.5;
  return q / q.norm();
}

// Largest principal-angle cosine between two lines (singular values of AᵀB).
double principal_cosine(const ProjectiveLine& a, const ProjectiveLine& b) {
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(a.frame().transpose() * b.frame());
  return svd.singularValues()[0];
}

// Two-sample Kolmogorov–Smirnov statistic.
double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) ++i;
    else ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
  }
  return d;
}

}  // namespace

TEST_CASE("sample_line frames") {
  numerics::Rng a(5), b(5);
  const auto la = sample_line(a), lb = sample_line(b);
  CHECK(la.frame() == lb.frame());
  CHECK((la.frame().transpose() * la.frame() - Eigen::Matrix2d::Identity()).norm() < 1e-12);
  Frame rank_one;
  rank_one << 1, 2, 1, 2, 0, 0, 0, 0;
  CHECK_THROWS_AS(ProjectiveLine{rank_one}, DegenerateConfiguration);
}

TEST_CASE("line distribution is orthogonally invariant") {
  numerics::Rng rng(123);
  const Matrix4 rot = random_rotation(rng);
  CHECK((rot.transpose() * rot - Matrix4::Identity()).norm() < 1e-12);
  const int N = 10000;
  std::vector<double> plain, rotated;
  plain.reserve(N);
  rotated.reserve(N);
  for (int i = 0; i < N; ++i) {
    const auto a = sample_line(rng), b = sample_line(rng);
    plain.push_back(principal_cosine(a, b));
    const auto c = sample_line(rng), d = sample_line(rng);
    rotated.push_back(principal_cosine(ProjectiveLine(rot * c.frame()), ProjectiveLine(rot * d.frame())));
  }
  // critical value at α = 0.001 for two samples of 10⁴
  CHECK(ks_statistic(plain, rotated) < 1.95 * std::sqrt(2.0 / N));
}

TEST_CASE("quadric through three lines of a ruling") {
  const auto q = quadric_through(ruling_line(1, 0), ruling_line(0, 1), ruling_line(1, 1));
  const double sign = q.q(0, 3) > 0 ? 1 : -1;
  CHECK((sign * q.q - standard_quadric()).norm() < 1e-10);
  CHECK(q.smallest_singular_ratio > 1e-10);
  CHECK(q.residual < 1e-10);
}

TEST_CASE("quadric contains its generating lines") {
  numerics::Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto l1 = sample_line(rng), l2 = sample_line(rng), l3 = sample_line(rng);
    const auto q = quadric_through(l1, l2, l3);
    CHECK(q.q.isApprox(q.q.transpose(), 0.0));
    CHECK(q.q.norm() == doctest::Approx(1.0).epsilon(1e-14));
    for (const auto* l : {&l1, &l2, &l3})
      for (int i = 0; i < 20; ++i) {
        const auto p = l->point(rng.normal(), rng.normal()).normalized();
        CHECK(std::abs(p.dot(q.q * p)) <= 1e-8);
      }
  }
}

TEST_CASE("degenerate triple is rejected") {
  const auto l = ruling_line(1, 0);
  CHECK_THROWS_AS(quadric_through(l, l, ruling_line(0, 1)), DegenerateConfiguration);
}

TEST_CASE("count on explicit configurations") {
  const auto l1 = ruling_line(1, 0), l2 = ruling_line(0, 1), l3 = ruling_line(1, 1);
  // secant through (1,0,0,0) and (0,0,0,1), both on the quadric: two real transversals
  Frame secant;
  secant << 1, 0, 0, 0, 0, 0, 0, 1;
  CHECK(count_real_meets(l1, l2, l3, ProjectiveLine(secant)) == 2);
  // restriction to span{(1,0,0,1), (0,1,-1,0)} is s² + t², definite: no transversal
  Frame miss;
  miss << 1, 0, 0, 1, 0, -1, 1, 0;
  CHECK(count_real_meets(l1, l2, l3, ProjectiveLine(miss)) == 0);
  // a line of the other ruling is contained in the quadric
  CHECK_THROWS_AS(count_real_meets(l1, l2, l3, other_ruling_line(1, 2)), DegenerateConfiguration);
}

TEST_CASE("parity and degeneracy rate") {
  const auto est = estimate_delta13(100000, 2024);
  CHECK(est.other_count == 0);
  CHECK(est.zero_count + est.two_count == 100000);
  CHECK(static_cast<double>(est.degenerate) / 100000 < 1e-4);
  CHECK(est.estimate.mean <= 2.0);
}

TEST_CASE("estimator is reproducible and independent of the thread count") {
  const auto a = estimate_delta13(40000, 7);
  const auto b = estimate_delta13(40000, 7, 3);
  CHECK(a.estimate.mean == b.estimate.mean);
  CHECK(a.estimate.std_error == b.estimate.std_error);
  CHECK(a.degenerate == b.degenerate);
}

TEST_CASE("standard error halves with four times the trials") {
  const auto a = estimate_delta13(25000, 1);
  const auto b = estimate_delta13(100000, 2);
  CHECK(a.estimate.std_error / b.estimate.std_error == doctest::Approx(2.0).epsilon(0.2));
}

TEST_CASE("rotating all lines leaves the count distribution unchanged") {
  numerics::Rng rng(55);
  const Matrix4 rot = random_rotation(rng);
  const auto plain = estimate_delta13(100000, 31);
  const auto rotated = estimate_delta13_rotated(100000, 32, rot);
  // 2×2 chi-square on the {0, 2} frequencies, 1 degree of freedom, α = 0.001
  const double n1 = 100000, n2 = 100000;
  const double z = static_cast<double>(plain.zero_count + rotated.zero_count) / (n1 + n2);
  double chi2 = 0;
  for (auto [obs, n] : {std::pair{double(plain.zero_count), n1}, std::pair{double(rotated.zero_count), n2}}) {
    chi2 += (obs - z * n) * (obs - z * n) / (z * n);
    chi2 += ((n - obs) - (1 - z) * n) * ((n - obs) - (1 - z) * n) / ((1 - z) * n);
  }
  CHECK(chi2 < 10.83);
}

TEST_CASE("Monte Carlo agrees with the line integral") {
  const auto est = estimate_delta13(200000, 20190101);
  const double exact = delta1_line_integral(3).value;
  CHECK(std::abs(est.estimate.mean - exact) <= 3 * est.estimate.std_error);
}

TEST_CASE("n hyperplanes meet in one point") {
  numerics::Rng rng(1);
  for (int n = 2; n <= 8; ++n)
    for (int i = 0; i < 10; ++i) CHECK(check_delta0(n, rng) == 1);
  Eigen::MatrixXd dup(3, 4);
  dup << 1, 2, 3, 4, 1, 2, 3, 4, 0, 1, 0, 1;
  CHECK_THROWS_AS(intersect_hyperplanes(dup), DegenerateConfiguration);
  CHECK_THROWS_AS(intersect_hyperplanes(Eigen::MatrixXd::Ones(2, 2)), std::invalid_argument);
}
