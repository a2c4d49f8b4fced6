#include <cmath>

#include "cli_runner.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

int line_count(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("constants report") {
  const CliResult r = run_cli("constants");
  REQUIRE(r.status == 0);
  CHECK(first_line(r.out) == "quantity,value");
  CHECK(std::abs(std::stod(report_value(r.out, "minus_upsilon_prime")) - 0.495018) <= 1e-4);
  CHECK(std::abs(std::stod(report_value(r.out, "upsilon_double_prime")) - 0.303516) <= 1e-4);
  CHECK(std::abs(std::stod(report_value(r.out, "xx_entropy_const")) - 0.726) <= 1e-3);
  CHECK(std::abs(std::stod(report_value(r.out, "xx_capacity_const")) - 0.535) <= 1e-3);
}

TEST_CASE("majorize on the incomparable pair") {
  const CliResult r = run_cli("majorize " + data_file("incomparable_rho.txt") + " " + data_file("incomparable_sigma.txt"));
  REQUIRE(r.status == 0);
  CHECK(report_value(r.out, "verdict") == "incomparable");
  CHECK(std::abs(std::stod(report_value(r.out, "delta_S")) - 0.0843) <= 1e-4);
  CHECK(std::abs(std::stod(report_value(r.out, "delta_PE_2")) - 0.256) <= 0.002);
}

TEST_CASE("JSON output carries the same fields") {
  const std::string args = "majorize " + data_file("incomparable_rho.txt") + " " + data_file("incomparable_sigma.txt");
  const CliResult csv = run_cli(args);
  const CliResult json = run_cli(args + " --format json");
  REQUIRE(json.status == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(int(j.size()) == line_count(csv.out) - 1);
  for (const auto& row : j) {
    const std::string key = row["quantity"];
    const std::string text = report_value(csv.out, key);
    if (row["value"].is_number()) CHECK(std::stod(text) == row["value"].get<double>());
    else if (row["value"].is_string()) CHECK(text == row["value"].get<std::string>());
  }
}

TEST_CASE("monotones report") {
  const CliResult r = run_cli("monotones " + data_file("qubit_mixed.txt"));
  REQUIRE(r.status == 0);
  CHECK(std::abs(std::stod(report_value(r.out, "entropy")) - std::log(2.0)) < 1e-11);
  const double m2 = std::pow(std::log(2.0) + 1.0, 2) - 1.0;
  CHECK(std::abs(std::stod(report_value(r.out, "M_2")) - m2) < 1e-11);
  CHECK(std::abs(std::stod(report_value(r.out, "PE_2")) + m2) < 1e-11);
  CHECK(std::abs(m2 - 1.866746) < 2e-6);
}

TEST_CASE("relative, clausius and erasure reports") {
  const CliResult rel = run_cli("relative " + data_file("two_level_rho.txt") + " " + data_file("qubit_mixed.txt"));
  REQUIRE(rel.status == 0);
  CHECK(std::abs(std::stod(report_value(rel.out, "rel_entropy")) - (std::log(2.0) + 0.9 * std::log(0.9) + 0.1 * std::log(0.1))) < 1e-11);
  const CliResult cl = run_cli("clausius " + data_file("two_level.json") + " " + data_file("two_level_rho.txt"));
  REQUIRE(cl.status == 0);
  CHECK(report_value(cl.out, "thermomajorizes") == "true");
  CHECK(std::stod(report_value(cl.out, "slack")) >= 0.0);
  const CliResult er = run_cli("erasure " + data_file("qubit_pure.txt"));
  REQUIRE(er.status == 0);
  for (int m = 1; m <= 4; ++m) CHECK(report_value(er.out, "min_qubits_order_" + std::to_string(m)) == "0");
}

TEST_CASE("chain and cft CSV schemas") {
  const CliResult chain = run_cli("chain --model xx --N 40 --ell-min 5 --ell-max 10 --ell-step 5 --state current");
  REQUIRE(chain.status == 0);
  CHECK(first_line(chain.out) == "model,N,ell,state,S,C,C3,C4,M2,M3,renyi2,renyi3");
  CHECK(line_count(chain.out) == 3);
  const CliResult cft = run_cli("cft --quantity SminusC --points 5");
  REQUIRE(cft.status == 0);
  CHECK(first_line(cft.out) == "x,quantity,value,gamma,model,ell");
  CHECK(line_count(cft.out) == 6);
  CHECK(cft.out == run_cli("cft --quantity SminusC --points 5").out);
}

TEST_CASE("census is JSON and seeded") {
  const CliResult a = run_cli("census --dim 3 --samples 300 --nmax 2");
  const CliResult b = run_cli("--seed 42 census --dim 3 --samples 300 --nmax 2");
  const CliResult c = run_cli("--seed 7 census --dim 3 --samples 300 --nmax 2");
  REQUIRE(a.status == 0);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["seed"] == 42);
  CHECK(j["levels"].size() == 2);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
}

TEST_CASE("errors are machine-readable with exit codes") {
  const CliResult usage = run_cli("frobnicate");
  CHECK(usage.status == 2);
  CHECK(nlohmann::json::parse(usage.err).contains("error"));

  const CliResult bad = run_cli("monotones " + data_file("two_level.json"));
  CHECK(bad.status == 2);
  CHECK(nlohmann::json::parse(bad.err)["error"] == "ParseError");

  // S - C of the XX current state stays positive on the scan window.
  const CliResult numeric = run_cli("cft --quantity SminusC --model xx --scan");
  CHECK(numeric.status == 3);
  CHECK(nlohmann::json::parse(numeric.err)["error"] == "NoSignChange");

  const CliResult unsupported = run_cli("chain --model ising --state current");
  CHECK(unsupported.status == 2);
  CHECK(nlohmann::json::parse(unsupported.err)["error"] == "UnsupportedCombination");
}

TEST_CASE("config files set options and reject unknown keys") {
  {
    std::ofstream cfg("cli_ok.toml");
    cfg << "format = \"json\"\n";
  }
  const CliResult ok = run_cli("--config cli_ok.toml constants");
  REQUIRE(ok.status == 0);
  CHECK(nlohmann::json::parse(ok.out).is_array());
  {
    std::ofstream cfg("cli_bad.toml");
    cfg << "colour = \"blue\"\n";
  }
  const CliResult bad = run_cli("--config cli_bad.toml constants");
  CHECK(bad.status == 2);
  std::remove("cli_ok.toml");
  std::remove("cli_bad.toml");
}
