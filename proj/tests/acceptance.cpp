// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 1 if any fails.
// `--known-failure ACn` (repeatable) keeps ACn's [FAIL] line but excludes it from the exit status.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "edeg/asymptotics.hpp"
#include "edeg/complex_degree.hpp"
#include "edeg/expected_degree.hpp"
#include "edeg/numerics/exact.hpp"
#include "edeg/schubert.hpp"
#include "edeg/zonoid.hpp"

using namespace edeg;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " failed: " << what << ';';
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;  // 0: no runtime requirement
  std::function<void(Check&)> body;
};

numerics::ExactInteger catalan(int m) {
  numerics::ExactInteger c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

void complex_degrees(Check& c) {
  for (int n = 3; n <= 15; ++n)
    c.require(complex_degree::delta_complex(1, n) == catalan(n - 1), "Catalan n=" + std::to_string(n));
  c.require(complex_degree::delta_complex(2, 5) == 42, "delta_complex(2,5) = 42");
  c.detail << " delta_complex(2,5) = " << complex_degree::delta_complex(2, 5);
}

void triple_agreement(Check& c) {
  const double line = delta1_line_integral(3).value;
  const double theta = delta1_theta_integral(3).value;
  const auto mc = schubert::estimate_delta13(1'000'000, 20190101).estimate;
  c.detail << std::setprecision(10) << " line = " << line << ", theta = " << theta << ", mc = " << mc.mean
           << " +- " << std::setprecision(3) << mc.std_error << ';';
  c.require(std::abs(line - theta) <= 1e-8 * line, "line vs theta within 1e-8");
  c.require(std::abs(mc.mean - line) <= 3 * mc.std_error, "mc vs line within 3 sigma");
  c.require(std::abs(mc.mean - theta) <= 3 * mc.std_error, "mc vs theta within 3 sigma");
  c.require(std::round(line * 100) == 172, "rounds to 1.72");
}

void zonoid_identities(Check& c) {
  for (int k = 1; k <= 2; ++k) {
    const zonoid::ZonoidModel model(k);
    const zonoid::Direction mu = zonoid::Direction::mu(k);
    const double R = zonoid::radial_max_closed_form(k);
    const double r = zonoid::radial(model, mu);
    c.require(std::abs(r - R) <= 1e-8, "r(mu) = R for k=" + std::to_string(k));

    const zonoid::Matrix E = zonoid::tangent_basis(mu.coords());
    // Hessian of r² in exponential coordinates by polarization of second directional derivatives
    zonoid::Matrix H(k, k);
    for (int i = 0; i < k; ++i) H(i, i) = zonoid::radial_squared_second_derivative(model, E.col(i));
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        const zonoid::Vector v = E.col(i) + E.col(j);
        H(i, j) = H(j, i) = 0.5 * (zonoid::radial_squared_second_derivative(model, v) - H(i, i) - H(j, j));
      }
    const zonoid::Matrix hess_err = H / (R * R) + 4.0 / (k + 1) * zonoid::Matrix::Identity(k, k);
    const double rel_h = hess_err.cwiseAbs().maxCoeff() / (4.0 / (k + 1));
    c.require(rel_h <= 1e-4, "Hessian ratio for k=" + std::to_string(k));

    // Dψ(μ) in the same basis
    zonoid::Matrix D(k, k);
    for (int j = 0; j < k; ++j) D.col(j) = E.transpose() * zonoid::psi_differential(model, mu, E.col(j));
    const double dpsi_err = (D - zonoid::psi_eigenvalue(k) * zonoid::Matrix::Identity(k, k)).cwiseAbs().maxCoeff();
    c.require(dpsi_err <= 1e-6, "Dpsi eigenvalue for k=" + std::to_string(k));
    c.detail << " k=" << k << ": |r-R| = " << std::abs(r - R) << ", Hessian rel err = " << rel_h
             << ", Dpsi err = " << dpsi_err << ';';
  }
}

void moment_identities(Check& c) {
  double worst = 0;
  for (int k = 1; k <= 4; ++k) {
    auto quad = [k](int m) {
      std::vector<int> e(static_cast<std::size_t>(k + 1), 0);
      e[0] = m;
      return zonoid::sphere_moment_quadrature(k, e);
    };
    const double g2 = zonoid::sphere_moment(k, 2), g4 = zonoid::sphere_moment(k, 4), g6 = zonoid::sphere_moment(k, 6);
    const double q2 = quad(2), q4 = quad(4), q6 = quad(6);
    const double e1 = std::abs(g4 / g2 - 3.0 / (k + 3)), e2 = std::abs(g6 / g2 - 15.0 / ((k + 3) * (k + 5)));
    const double e3 = std::abs(q4 / q2 - g4 / g2), e4 = std::abs(q6 / q2 - g6 / g2);
    const double e5 = std::abs(q2 / g2 - 1);
    worst = std::max({worst, e1, e2, e3, e4, e5});
  }
  c.require(worst <= 1e-8, "moment ratios within 1e-8");
  c.detail << " worst deviation = " << worst << ';';
}

void lambda_constants(Check& c) {
  const std::uint64_t N = 1'000'000;
  const auto s2 = asymptotics::lambda_mc_sphere(2, N, 101);
  c.require(std::abs(s2.mean - std::sqrt(kPi / 3)) <= 3 * s2.std_error, "sphere Lambda_2 within 3 sigma");
  c.detail << std::setprecision(6) << " sphere k=2: " << s2.mean << " +- " << s2.std_error << ';';
  for (int k = 2; k <= 3; ++k) {
    const auto s = asymptotics::lambda_mc_sphere(k, N, 200 + k);
    const auto q = asymptotics::lambda_mc_coefficient(k, N, 300 + k);
    const double sigma = std::hypot(s.std_error, q.std_error);
    c.require(std::abs(s.mean - q.mean) <= 3 * sigma, "sphere vs coefficient for k=" + std::to_string(k));
    c.detail << " k=" << k << ": sphere " << s.mean << ", coefficient " << q.mean << " +- " << sigma << ';';
  }
}

void asymptotic_convergence(Check& c) {
  auto real_err = [](int n) {
    return std::abs(delta1_line_integral(n).value / asymptotics::delta_real_asymptotic(1, n) - 1);
  };
  auto complex_err = [](int n) {
    return std::abs(numerics::to_double(complex_degree::delta_complex(1, n)) /
                        complex_degree::delta_complex_asymptotic(1, n) - 1);
  };
  const double e20 = real_err(20), e40 = real_err(40);
  const double c20 = complex_err(20), c40 = complex_err(40);
  c.require(e20 <= 0.15, "real e(20) <= 0.15");
  c.require(e40 <= 0.6 * e20, "real e(40) <= 0.6 e(20)");
  c.require(c20 <= 0.15, "complex e(20) <= 0.15");
  c.require(c40 <= 0.6 * c20, "complex e(40) <= 0.6 e(20)");
  c.detail << std::setprecision(4) << " real e(20) = " << e20 << ", e(40) = " << e40 << "; complex e(20) = " << c20
           << ", e(40) = " << c40 << ';';
}

void pipeline_consistency(Check& c) {
  const double ik = ik_quadrature(1, 3).value;
  const double via_beta = std::exp(asymptotics::log_beta(1, 3)) * ik;
  const double line = delta1_line_integral(3).value;
  c.require(std::abs(via_beta - line) <= 1e-6, "beta*I vs line within 1e-6");
  c.detail << std::setprecision(12) << " beta*I = " << via_beta << ", line = " << line << ';';
}

void delta_zero(Check& c) {
  numerics::Rng rng(8);
  for (int n = 2; n <= 8; ++n) {
    c.require(schubert::check_delta0(n, rng) == 1, "hyperplane count n=" + std::to_string(n));
    c.require(delta_real(0, n, Method::ZonoidQuadrature).value == 1.0, "delta_real(0, n)");
  }
}

void parity(Check& c) {
  const auto est = schubert::estimate_delta13(100'000, 4242);
  const double rate = static_cast<double>(est.degenerate) / 100'000;
  c.require(est.other_count == 0, "only counts 0 and 2");
  c.require(rate < 1e-4, "degenerate rate < 0.01%");
  c.detail << " zero = " << est.zero_count << ", two = " << est.two_count << ", other = " << est.other_count
           << ", degenerate = " << est.degenerate << ';';
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> known;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--known-failure" && i + 1 < argc) {
      known.insert(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--known-failure ACn]...\n";
      return 2;
    }
  }
  const std::vector<Criterion> criteria{
      {1, "exact complex degrees", 1.0, complex_degrees},
      {2, "delta_{1,3} triple agreement", 120.0, triple_agreement},
      {3, "zonoid identities at mu (k = 1, 2)", 60.0, zonoid_identities},
      {4, "sphere moment identities (k = 1..4)", 0.0, moment_identities},
      {5, "Lambda constants", 0.0, lambda_constants},
      {6, "asymptotic convergence", 60.0, asymptotic_convergence},
      {7, "beta times I_1(3) equals the line integral", 0.0, pipeline_consistency},
      {8, "delta_{0,n} = 1", 0.0, delta_zero},
      {9, "parity of Monte Carlo counts", 0.0, parity},
  };
  int failures = 0;
  int tolerated = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << " exception: " << e.what() << ';';
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.budget_s > 0 && secs > cr.budget_s) {
      c.ok = false;
      c.detail << " over time budget of " << cr.budget_s << " s;";
    }
    const std::string tag = "AC" + std::to_string(cr.id);
    if (!c.ok) (known.contains(tag) ? tolerated : failures) += 1;
    std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << tag << ' ' << cr.title << " (" << std::fixed
              << std::setprecision(2) << secs << " s)" << std::defaultfloat << c.detail.str()
              << (!c.ok && known.contains(tag) ? " (known failure)" : "") << std::endl;
  }
  std::cout << (failures == 0 ? "no unexpected failures" : std::to_string(failures) + " criteria failed");
  if (tolerated > 0) std::cout << ", " << tolerated << " known failure(s)";
  std::cout << '\n';
  return failures == 0 ? 0 : 1;
}
