#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "edeg/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "edeg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = edeg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> records(const std::string& text) {
  std::vector<nlohmann::json> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) v.push_back(nlohmann::json::parse(line));
  return v;
}

}  // namespace

TEST_CASE("complex degree") {
  const auto r = invoke({"complex", "--k", "1", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("value = 5 ") != std::string::npos);
  CHECK(r.out.find("[exact]") != std::string::npos);
  const auto j = records(invoke({"--json", "complex", "--k", "2", "--n", "5"}).out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["value"] == "42");
  CHECK(j[0]["method"] == "exact");
}

TEST_CASE("delta1 line integral") {
  const auto r = invoke({"--json", "delta1", "--n", "3", "--method", "line-integral"});
  REQUIRE(r.code == 0);
  const auto j = records(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["value"].get<double>() == doctest::Approx(1.72).epsilon(0.005));
  CHECK(j[0]["method"] == "line-integral");
  CHECK(j[0]["error"].get<double>() >= 0);
  CHECK(j[0]["version"] == std::string(edeg::cli::kVersion));
  CHECK(j[0].contains("wall_time"));
  CHECK(j[0]["parameters"]["n"] == 3);
}

TEST_CASE("records round-trip through the parser") {
  const auto r = invoke({"--json", "delta", "--k", "1", "--n", "5", "--method", "theta-integral"});
  REQUIRE(r.code == 0);
  const auto j = records(r.out);
  REQUIRE(j.size() == 1);
  CHECK(nlohmann::json::parse(j[0].dump()) == j[0]);
  const auto again = records(invoke({"--json", "delta", "--k", "1", "--n", "5", "--method", "theta-integral"}).out);
  CHECK(again[0]["value"].get<double>() == j[0]["value"].get<double>());
}

TEST_CASE("mc is reproducible") {
  const auto a = invoke({"mc", "--trials", "1000", "--seed", "42"});
  const auto b = invoke({"mc", "--trials", "1000", "--seed", "42"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto ja = records(invoke({"--json", "mc", "--trials", "1000", "--seed", "42"}).out);
  const auto jb = records(invoke({"--json", "--threads", "2", "mc", "--trials", "1000", "--seed", "42"}).out);
  CHECK(ja[0]["value"] == jb[0]["value"]);
  CHECK(ja[0]["seed"] == 42);
  CHECK(invoke({"--json", "mc", "--trials", "1000"}).code == edeg::cli::kParameterError);
}

TEST_CASE("other subcommands") {
  CHECK(invoke({"asymptotic", "--k", "2", "--n", "12"}).code == 0);
  CHECK(invoke({"lambda", "--k", "2", "--method", "closed"}).code == 0);
  const auto lam = records(invoke({"--json", "lambda", "--k", "3", "--samples", "2000", "--seed", "1"}).out);
  CHECK(lam[0]["method"] == "monte-carlo-sphere");
  const auto rad = records(invoke({"--json", "radial", "--u", "1,1"}).out);
  CHECK(rad[0]["value"].get<double>() == doctest::Approx(0.3535533906).epsilon(1e-9));
  const auto mom = records(invoke({"--json", "moments", "--k", "1", "--m", "2"}).out);
  REQUIRE(mom.size() == 2);
  CHECK(mom[0]["value"].get<double>() == doctest::Approx(0.7853981634).epsilon(1e-10));
  const auto d0 = records(invoke({"--json", "check-delta0", "--n", "5", "--reps", "20"}).out);
  CHECK(d0[0]["value"] == 1.0);
}

TEST_CASE("table emits CSV") {
  const auto r = invoke({"table", "--from", "3", "--to", "5"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  CHECK(header == "n,method,value,asymptote,ratio");
  int rows = 0;
  while (std::getline(in, row)) {
    CHECK(row.find(",line-integral,") != std::string::npos);
    ++rows;
  }
  CHECK(rows == 3);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"frobnicate"}).code == edeg::cli::kParameterError);
  CHECK(invoke({"complex", "--k", "1", "--n", "4", "--bogus"}).code == edeg::cli::kParameterError);
  CHECK(invoke({"delta1", "--n", "2"}).code == edeg::cli::kParameterError);
  CHECK(invoke({"delta", "--k", "2", "--n", "7", "--method", "line-integral"}).code == edeg::cli::kParameterError);
  CHECK(invoke({"radial", "--u", "1,0,1"}).code == edeg::cli::kParameterError);
  CHECK(invoke({"--help"}).code == 0);
}
