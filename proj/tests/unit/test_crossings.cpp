#include <cmath>

#include "doctest.h"
#include "entmono/cftanalytic.hpp"
#include "entmono/error.hpp"

using namespace entmono;

namespace {

double crossing_or_nan(CftQuantity q, const CftParams& p) {
  try {
    return find_crossing(q, p);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoSignChange) throw;
    return std::nan("");
  }
}

}  // namespace

TEST_CASE("Ising fermion-state entropy crossing") {
  const double x = crossing_or_nan(CftQuantity::DeltaS, CftParams::ising());
  CHECK(std::abs(x - 0.337) <= 0.005);
}

TEST_CASE("Ising fermion-state second Renyi crossing") {
  const double x = crossing_or_nan(CftQuantity::DeltaS2, CftParams::ising());
  CHECK(std::abs(x - 0.292) <= 0.005);
}

TEST_CASE("Ising fermion-state third Renyi crossing") {
  const double x = crossing_or_nan(CftQuantity::DeltaS3, CftParams::ising());
  CHECK(std::abs(x - 0.282) <= 0.005);
}

TEST_CASE("Ising fermion-state second ladder crossing") {
  bool hit = false;
  for (double ell : {100.0, 200.0}) {
    CftParams p = CftParams::ising();
    p.ell = ell;
    const double x = crossing_or_nan(CftQuantity::DeltaM2, p);
    hit = hit || std::abs(x - 0.403) <= 0.01;
  }
  CHECK(hit);
}

#include "cli_runner.hpp"

TEST_CASE("CLI third Renyi crossing scan") {
  const CliResult r = run_cli("cft --quantity deltaS3 --gamma 0.5 --scan");
  CHECK(r.status == 0);
  const std::string v = report_value(r.out, "crossing");
  CHECK(!v.empty());
  if (!v.empty()) CHECK(std::abs(std::stod(v) - 0.282) <= 0.005);
}
