#include "edeg/cli.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edeg/asymptotics.hpp"
#include "edeg/complex_degree.hpp"
#include "edeg/errors.hpp"
#include "edeg/expected_degree.hpp"
#include "edeg/numerics/exact.hpp"
#include "edeg/schubert.hpp"
#include "edeg/zonoid.hpp"

namespace edeg::cli {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kDefaultSeed = 20190101;

struct RunRecord {
  RunRecord(std::string cmd, json params) : command(std::move(cmd)), parameters(std::move(params)) {}

  std::string command;
  json parameters = json::object();
  json value;  // number, or a decimal string for exact integers
  double error = 0.0;
  std::string method;
  std::optional<std::uint64_t> seed;
  double wall_time = 0.0;
};

json to_json(const RunRecord& r) {
  json j{{"command", r.command},     {"parameters", r.parameters}, {"value", r.value},
         {"error", r.error},         {"method", r.method},         {"wall_time", r.wall_time},
         {"version", std::string(kVersion)}};
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  return j;
}

class Emitter {
 public:
  Emitter(std::ostream& out, bool json_mode) : out_(out), json_(json_mode) {}

  void emit(RunRecord r, Clock::time_point start) {
    r.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
    if (json_) {
      out_ << to_json(r).dump() << '\n';
      return;
    }
    out_ << r.command;
    for (const auto& [key, val] : r.parameters.items()) out_ << ' ' << key << '=' << val.dump();
    out_ << ": value = ";
    if (r.value.is_string()) out_ << r.value.get<std::string>();
    else out_ << std::setprecision(12) << r.value.get<double>();
    out_ << "  error = " << std::setprecision(3) << r.error << "  [" << r.method << ']';
    if (r.seed) out_ << "  seed = " << *r.seed;
    out_ << '\n';
  }

  bool json_mode() const { return json_; }
  std::ostream& stream() { return out_; }

 private:
  std::ostream& out_;
  bool json_;
};

std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size() && item.find_first_not_of(" \t", used) != std::string::npos)
        throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse '" + item + "' as a number");
    }
  }
  return v;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Expected and complex degrees of Grassmannians"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  bool json_mode = false;
  unsigned threads = 1;
  app.add_flag("--json", json_mode, "Emit one JSON record per line");
  app.add_option("--threads", threads, "Worker threads for Monte Carlo")->check(CLI::Range(1u, 256u));

  std::function<void(Emitter&)> action;

  // complex
  int ck = 1, cn = 3;
  auto* complex = app.add_subcommand("complex", "Exact complex degree and its asymptote");
  complex->add_option("--k", ck, "k (lines: 1)")->required()->check(CLI::NonNegativeNumber);
  complex->add_option("--n", cn, "n (ambient RP^n)")->required();
  complex->callback([&] {
    action = [&](Emitter& e) {
      const auto t0 = Clock::now();
      RunRecord r{"complex", {{"k", ck}, {"n", cn}}};
      r.value = complex_degree::delta_complex(ck, cn).str();
      r.method = "exact";
      e.emit(r, t0);
      if (ck > 0) {
        const auto t1 = Clock::now();
        RunRecord a{"complex", {{"k", ck}, {"n", cn}}};
        a.value = complex_degree::delta_complex_asymptotic(ck, cn);
        a.error = a.value.get<double>() / cn;
        a.method = "asymptotic";
        e.emit(a, t1);
      }
    };
  });

  // delta1 / delta
  int dk = 1, dn = 3;
  std::string method = "line-integral";
  double tol = 1e-10;
  auto* delta1 = app.add_subcommand("delta1", "Expected degree for lines (k = 1)");
  delta1->add_option("--n", dn, "n >= 3")->required();
  delta1->add_option("--method", method, "line-integral | theta-integral | zonoid-quadrature | asymptotic")
      ->capture_default_str();
  delta1->add_option("--tol", tol, "Relative quadrature tolerance")->capture_default_str();

  auto* delta = app.add_subcommand("delta", "Expected degree of G(k,n)");
  delta->add_option("--k", dk, "k >= 0")->required();
  delta->add_option("--n", dn, "n > k")->required();
  delta->add_option("--method", method, "line-integral | theta-integral | zonoid-quadrature | asymptotic")
      ->capture_default_str();
  delta->add_option("--tol", tol, "Relative quadrature tolerance")->capture_default_str();

  auto delta_action = [&](const char* name) {
    return [&, name] {
      action = [&, name](Emitter& e) {
        const auto t0 = Clock::now();
        const EdegResult res = delta_real(dk, dn, parse_method(method), tol);
        RunRecord r{name, {{"k", dk}, {"n", dn}, {"tol", tol}}};
        r.value = res.value;
        r.error = res.error_bound;
        r.method = std::string(to_string(res.method));
        e.emit(r, t0);
      };
    };
  };
  delta1->callback([&, act = delta_action("delta1")] {
    dk = 1;
    act();
  });
  delta->callback(delta_action("delta"));

  // asymptotic
  int ak = 1, an = 10;
  bool complex_case = false;
  auto* asym = app.add_subcommand("asymptotic", "Leading-order asymptote a_k b_k^n n^(-k(k+1)/4)");
  asym->add_option("--k", ak, "k >= 1")->required();
  asym->add_option("--n", an, "n")->required();
  asym->add_flag("--complex", complex_case, "Complex asymptote instead");
  asym->callback([&] {
    action = [&](Emitter& e) {
      const auto t0 = Clock::now();
      RunRecord r{"asymptotic", {{"k", ak}, {"n", an}, {"complex", complex_case}}};
      if (complex_case) {
        r.value = complex_degree::delta_complex_asymptotic(ak, an);
      } else {
        if (ak < 1 || an < 1) throw std::invalid_argument("asymptotic: need k >= 1 and n >= 1");
        r.value = asymptotics::delta_real_asymptotic(ak, an);
      }
      r.error = r.value.get<double>() / an;
      r.method = "asymptotic";
      e.emit(r, t0);
      if (!complex_case) {
        const auto t1 = Clock::now();
        RunRecord a{"asymptotic", {{"k", ak}, {"coefficient", "a"}}};
        a.value = asymptotics::a_coefficient(ak);
        a.method = ak <= 2 ? "closed-form" : "monte-carlo";
        e.emit(a, t1);
        const auto t2 = Clock::now();
        RunRecord b{"asymptotic", {{"k", ak}, {"coefficient", "b"}}};
        b.value = asymptotics::b_coefficient(ak);
        b.method = "closed-form";
        e.emit(b, t2);
      }
    };
  });

  // lambda
  int lk = 2;
  std::string lmethod = "sphere";
  std::uint64_t lsamples = asymptotics::kDefaultLambdaSamples;
  std::optional<std::uint64_t> seed;
  auto* lambda = app.add_subcommand("lambda", "The constant Lambda_k");
  lambda->add_option("--k", lk, "k >= 1")->required();
  lambda->add_option("--method", lmethod, "closed | sphere | coefficient")->capture_default_str();
  lambda->add_option("--samples", lsamples, "Monte Carlo samples")->capture_default_str();
  lambda->add_option("--seed", seed, "Monte Carlo seed");
  lambda->callback([&] {
    action = [&](Emitter& e) {
      const auto t0 = Clock::now();
      RunRecord r{"lambda", {{"k", lk}}};
      if (lmethod == "closed") {
        r.value = asymptotics::lambda_closed(lk);
        r.method = "closed-form";
      } else {
        if (e.json_mode() && !seed) throw std::invalid_argument("lambda: --seed is required with --json");
        const std::uint64_t s = seed.value_or(kDefaultSeed);
        numerics::MonteCarloEstimate est;
        if (lmethod == "sphere") est = asymptotics::lambda_mc_sphere(lk, lsamples, s, threads);
        else if (lmethod == "coefficient") est = asymptotics::lambda_mc_coefficient(lk, lsamples, s, threads);
        else throw std::invalid_argument("lambda: unknown method '" + lmethod + "'");
        r.parameters["samples"] = lsamples;
        r.value = est.mean;
        r.error = est.std_error;
        r.method = "monte-carlo-" + lmethod;
        r.seed = s;
      }
      e.emit(r, t0);
    };
  });

  // radial
  std::string direction;
  auto* rad = app.add_subcommand("radial", "Radial function r(u) of the zonoid");
  rad->add_option("--u", direction, "Comma-separated direction in R^(k+1), e.g. 0.9,0.4")->required();
  rad->callback([&] {
    action = [&](Emitter& e) {
      const auto t0 = Clock::now();
      const auto coords = parse_vector(direction);
      const int k = static_cast<int>(coords.size()) - 1;
      if (k < 1) throw std::invalid_argument("radial: need at least two coordinates");
      const zonoid::ZonoidModel model(k);
      const zonoid::Direction u(Eigen::Map<const zonoid::Vector>(coords.data(), k + 1));
      const auto sol = zonoid::radial_solve(model, u);
      RunRecord r{"radial", {{"u", coords}, {"k", k}}};
      r.value = sol.value;
      r.error = sol.residual;
      r.method = "newton";
      e.emit(r, t0);
    };
  });

  // moments
  int mk = 1, mm = 2, morder = 24;
  auto* mom = app.add_subcommand("moments", "Sphere moment G(m) over the positive orthant");
  mom->add_option("--k", mk, "k >= 1")->required();
  mom->add_option("--m", mm, "Even exponent")->required();
  mom->add_option("--order", morder, "Gauss order per angle for the quadrature check")->capture_default_str();
  mom->callback([&] {
    action = [&](Emitter& e) {
      if (mm < 0 || mm % 2 != 0) throw std::invalid_argument("moments: m must be even and >= 0");
      const auto t0 = Clock::now();
      RunRecord r{"moments", {{"k", mk}, {"m", mm}}};
      r.value = zonoid::sphere_moment(mk, mm);
      r.method = "closed-form";
      e.emit(r, t0);
      const auto t1 = Clock::now();
      std::vector<int> ex(static_cast<std::size_t>(mk + 1), 0);
      ex[0] = mm;
      RunRecord q{"moments", {{"k", mk}, {"m", mm}, {"order", morder}}};
      q.value = zonoid::sphere_moment_quadrature(mk, ex, morder);
      q.error = std::abs(q.value.get<double>() - r.value.get<double>());
      q.method = "quadrature";
      e.emit(q, t1);
    };
  });

  // mc
  std::uint64_t trials = 100000;
  auto* mc = app.add_subcommand("mc", "Monte Carlo count of real lines meeting four random lines");
  mc->add_option("--trials", trials, "Number of four-line configurations")->capture_default_str();
  mc->add_option("--seed", seed, "Master seed");
  mc->callback([&] {
    action = [&](Emitter& e) {
      if (e.json_mode() && !seed) throw std::invalid_argument("mc: --seed is required with --json");
      const std::uint64_t s = seed.value_or(kDefaultSeed);
      const auto t0 = Clock::now();
      const auto est = schubert::estimate_delta13(trials, s, threads);
      RunRecord r{"mc", {{"trials", trials}, {"degenerate", est.degenerate}, {"zero", est.zero_count},
                         {"two", est.two_count}}};
      r.value = est.estimate.mean;
      r.error = est.estimate.std_error;
      r.method = std::string(to_string(Method::MonteCarlo));
      r.seed = s;
      e.emit(r, t0);
    };
  });

  // check-delta0
  int hn = 3, reps = 100;
  auto* d0 = app.add_subcommand("check-delta0", "Average number of points in n random hyperplanes of RP^n");
  d0->add_option("--n", hn, "n >= 1")->required();
  d0->add_option("--reps", reps, "Repetitions")->capture_default_str()->check(CLI::PositiveNumber);
  d0->add_option("--seed", seed, "Seed");
  d0->callback([&] {
    action = [&](Emitter& e) {
      const std::uint64_t s = seed.value_or(kDefaultSeed);
      const auto t0 = Clock::now();
      numerics::Rng rng(s);
      long total = 0;
      for (int i = 0; i < reps; ++i) total += schubert::check_delta0(hn, rng);
      RunRecord r{"check-delta0", {{"n", hn}, {"reps", reps}}};
      r.value = static_cast<double>(total) / reps;
      r.method = "linear-solve";
      r.seed = s;
      e.emit(r, t0);
    };
  });

  // table
  int from = 3, to = 20;
  auto* table = app.add_subcommand("table", "CSV of delta_{1,n} against its asymptote");
  table->add_option("--from", from, "First n (>= 3)")->capture_default_str();
  table->add_option("--to", to, "Last n")->capture_default_str();
  table->add_option("--method", method, "line-integral | theta-integral | zonoid-quadrature")
      ->capture_default_str();
  table->add_option("--tol", tol, "Relative quadrature tolerance")->capture_default_str();
  table->callback([&] {
    action = [&](Emitter& e) {
      if (from < 3 || to < from) throw std::invalid_argument("table: need 3 <= from <= to");
      const Method m = parse_method(method);
      if (!e.json_mode()) e.stream() << "n,method,value,asymptote,ratio\n";
      for (int n = from; n <= to; ++n) {
        const auto t0 = Clock::now();
        const EdegResult res = delta_real(1, n, m, tol);
        const double asym = asymptotics::delta_real_asymptotic(1, n);
        if (e.json_mode()) {
          RunRecord r{"table", {{"n", n}, {"asymptote", asym}, {"ratio", res.value / asym}}};
          r.value = res.value;
          r.error = res.error_bound;
          r.method = std::string(to_string(res.method));
          e.emit(r, t0);
        } else {
          e.stream() << n << ',' << to_string(res.method) << ',' << std::setprecision(15) << res.value << ','
                     << asym << ',' << res.value / asym << '\n';
        }
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParameterError;
  }

  Emitter emitter(out, json_mode);
  try {
    if (action) action(emitter);
    return kOk;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (residual " << e.residual() << ")\n";
    return kNonConvergence;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace edeg::cli
