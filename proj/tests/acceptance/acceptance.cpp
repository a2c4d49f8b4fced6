#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "entmono/cftanalytic.hpp"
#include "entmono/erasure.hpp"
#include "entmono/error.hpp"
#include "entmono/fermichain.hpp"
#include "entmono/monotones.hpp"
#include "entmono/orderlab.hpp"
#include "entmono/relative.hpp"
#include "entmono/sampling.hpp"
#include "fock_oracle.hpp"

using namespace entmono;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome constants() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const UpsilonDerivatives u = upsilon_derivatives();
  const double split = std::log(2.0) / 3.0;
  const double secs = elapsed(t0);
  o.require(std::abs(-u.first - 0.495018) <= 1e-4, "-Upsilon'(1) = " + fmt("%.7f", -u.first));
  o.require(std::abs(u.second - 0.303516) <= 1e-4, "Upsilon''(1) = " + fmt("%.7f", u.second));
  o.require(std::abs(split - u.first - 0.726) <= 1e-3, "entropy constant " + fmt("%.5f", split - u.first));
  o.require(std::abs(split + u.second - 0.535) <= 1e-3, "capacity constant " + fmt("%.5f", split + u.second));
  o.require(secs < 5.0, "runtime " + fmt("%.2f s", secs));
  o.note("-U'=" + fmt("%.6f", -u.first) + " U''=" + fmt("%.6f", u.second) + " consts " +
         fmt("%.4f", split - u.first) + "/" + fmt("%.4f", split + u.second) + " in " + fmt("%.2f s", secs));
  return o;
}

Outcome incomparable_pair() {
  Outcome o;
  const Spectrum rho({0.49, 0.41, 0.10});
  const Spectrum sigma({0.5, 0.3, 0.2});
  const OrderVerdict v = cone_verdict(rho, sigma, 2, ConeFamily::Extremal);
  o.require(v.majorization == Order::Incomparable, "verdict " + to_string(v.majorization));
  o.require(std::abs(v.gaps[0] - 0.084) <= 0.002, "entropy gap " + fmt("%.5f", v.gaps[0]));
  o.require(std::abs(v.gaps[1] - 0.256) <= 0.002, "P2 gap " + fmt("%.5f", v.gaps[1]));
  o.note("verdict " + to_string(v.majorization) + ", dS=" + fmt("%.5f", v.gaps[0]) + ", dP2=" + fmt("%.5f", v.gaps[1]));
  return o;
}

Outcome crossings() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  auto crossing = [](CftQuantity q, const CftParams& p) {
    try {
      return find_crossing(q, p);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoSignChange) throw;
      return std::nan("");
    }
  };
  const CftParams ising = CftParams::ising();
  struct Target {
    CftQuantity q;
    double x;
  };
  for (Target t : {Target{CftQuantity::DeltaS, 0.337}, Target{CftQuantity::DeltaS2, 0.292},
                   Target{CftQuantity::DeltaS3, 0.282}}) {
    const double x = crossing(t.q, ising);
    const std::string shown = std::isnan(x) ? "none" : fmt("%.4f", x);
    o.require(std::abs(x - t.x) <= 0.005, to_string(t.q) + " crossing " + shown + " (want " + fmt("%.3f", t.x) + ")");
    const double mid = cft_quantity(t.q, 0.5, ising);
    o.note(to_string(t.q) + "(0.5)=" + fmt("%.4f", mid));
  }
  bool hit = false;
  std::string m2;
  for (double ell : {100.0, 200.0}) {
    CftParams p = ising;
    p.ell = ell;
    const double x = crossing(CftQuantity::DeltaM2, p);
    hit = hit || std::abs(x - 0.403) <= 0.01;
    m2 += (m2.empty() ? "" : ", ") + fmt("ell=%g: ", ell) + (std::isnan(x) ? "none" : fmt("%.4f", x));
  }
  o.require(hit, "deltaM2 crossing " + m2 + " (want 0.403)");
  const double secs = elapsed(t0);
  o.require(secs < 10.0, "runtime " + fmt("%.2f s", secs));
  return o;
}

Outcome figure_one() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const int n = 200;
  struct Case {
    ChainModel model;
    PresetState state;
    CftParams params;
    double tol;
  };
  for (const Case& c : {Case{ChainModel::XX, PresetState::Current, CftParams::xx(), 0.02},
                        Case{ChainModel::IsingCritical, PresetState::Psi, CftParams::ising(), 0.03}}) {
    const std::vector<int> occ = preset_state(c.model, n, c.state);
    double worst = 0.0;
    for (int ell = 10; ell <= 100; ++ell) {
      const FreeFermionStats st = ff_stats(block_occupations(ChainSpec{c.model, n, occ, ell}), 2);
      const double lattice = st.stats.entropy() - st.stats.capacity();
      worst = std::max(worst, std::abs(lattice - s_minus_c(double(ell) / n, c.params)));
    }
    const std::string tag = to_string(c.model) + " " + to_string(c.state);
    o.require(worst <= c.tol, tag + " deviation " + fmt("%.4f", worst));
    o.note(tag + " max dev " + fmt("%.4f", worst));
  }
  const double secs = elapsed(t0);
  o.require(secs < 120.0, "runtime " + fmt("%.1f s", secs));
  o.note(fmt("%.1f s", secs));
  return o;
}

Outcome inequality_suite() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(42);
  double worst_dm = 0.0, worst3 = 0.0, worst4 = 0.0, worst_j2 = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t d = 2 + trial % 7;
    const Spectrum rho = random_spectrum(rng, d);
    const Spectrum sigma = apply_stochastic(rho, random_bistochastic(rng, d));
    const std::vector<double> dm = delta_m(rho, sigma, 6);
    for (double v : dm) worst_dm = std::min(worst_dm, v);
    worst3 = std::min(worst3, inequality3_slack_from_delta(dm).slack);
    worst4 = std::min(worst4, inequality4_slack_from_delta(dm).slack);
    worst_j2 = std::min(worst_j2, entropy_capacity_slack(rho, sigma));
  }
  const double secs = elapsed(t0);
  o.require(worst_dm >= -1e-10, "min dM " + fmt("%.3g", worst_dm));
  o.require(worst3 >= -1e-10, "min third-order slack " + fmt("%.3g", worst3));
  o.require(worst4 >= -1e-10, "min fourth-order slack " + fmt("%.3g", worst4));
  o.require(worst_j2 >= -1e-10, "min entropy-capacity slack " + fmt("%.3g", worst_j2));
  o.require(secs < 30.0, "runtime " + fmt("%.1f s", secs));
  o.note("10^4 pairs, worst slack " + fmt("%.3g", std::min({worst_dm, worst3, worst4, worst_j2})) + " in " +
         fmt("%.2f s", secs));
  return o;
}

Outcome oracles() {
  Outcome o;
  Rng rng(42);
  double fd = 0.0, add = 0.0, ff = 0.0, slater = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const Spectrum s = random_spectrum(rng, 2 + trial % 7);
    for (int n = 1; n <= 4; ++n) {
      const ShiftParams p = ShiftParams::minimal(n);
      fd = std::max(fd, std::abs(shifted_moment_fd(s, p) - shifted_moment(s, p)));
    }
    const Spectrum a = random_spectrum(rng, 2 + trial % 3);
    const Spectrum b = random_spectrum(rng, 2 + trial % 4);
    const ModularStats sa = modular_stats(a, 6), sb = modular_stats(b, 6), sab = modular_stats(kron(a, b), 6);
    for (int k = 1; k <= 6; ++k) add = std::max(add, std::abs(sab.cumulant(k) - sa.cumulant(k) - sb.cumulant(k)));
  }
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> nus(1 + trial % 4);
    for (double& v : nus) v = u(rng);
    std::sort(nus.rbegin(), nus.rend());
    const FreeFermionStats st = ff_stats(BlockOccupations{nus}, 6);
    const ModularStats ref = modular_stats(Spectrum::normalize(fock::product_spectrum(nus), true), 6);
    for (int k = 1; k <= 6; ++k) ff = std::max(ff, std::abs(st.stats.cumulant(k) - ref.cumulant(k)));
  }
  for (int n : {4, 6, 8}) {
    struct Item {
      ChainModel model;
      PresetState state;
      Eigen::VectorXcd psi;
    };
    const std::vector<Item> items{
        {ChainModel::XX, PresetState::Ground, fock::xx_state(n, preset_state(ChainModel::XX, n, PresetState::Ground))},
        {ChainModel::XX, PresetState::Current, fock::xx_state(n, preset_state(ChainModel::XX, n, PresetState::Current))},
        {ChainModel::IsingCritical, PresetState::Ground, fock::ising_state(n, false)},
        {ChainModel::IsingCritical, PresetState::Psi, fock::ising_state(n, true)}};
    for (const Item& it : items)
      for (int ell = 1; ell < n; ++ell) {
        const std::vector<double> exact = fock::sorted_eigs(fock::reduce(it.psi, n, ell));
        const std::vector<double> implied = fock::product_spectrum(
            block_occupations(ChainSpec{it.model, n, preset_state(it.model, n, it.state), ell}).nus);
        for (std::size_t i = 0; i < exact.size(); ++i) slater = std::max(slater, std::abs(exact[i] - implied[i]));
      }
  }
  o.require(fd <= 1e-6, "finite differences " + fmt("%.2g", fd));
  o.require(add <= 1e-10, "additivity " + fmt("%.2g", add));
  o.require(ff <= 1e-10, "free-fermion moments " + fmt("%.2g", ff));
  o.require(slater <= 1e-8, "Fock-space reduction " + fmt("%.2g", slater));
  o.note("max errors fd " + fmt("%.1e", fd) + ", additivity " + fmt("%.1e", add) + ", ff " + fmt("%.1e", ff) +
         ", Fock " + fmt("%.1e", slater));
  return o;
}

Outcome extremal_solver() {
  Outcome o;
  Rng rng(42);
  std::uniform_real_distribution<double> root(0.0, 5.0);
  int residual_fail = 0, concave_fail = 0;
  for (int n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> roots(extremal_root_count(n));
      for (double& r : roots) r = root(rng);
      if (extremal_identity_residual(n, roots) != 0.0) ++residual_fail;
      if (!extremal_concavity_check(extremal_poly(n, roots))) ++concave_fail;
    }
  o.require(residual_fail == 0, std::to_string(residual_fail) + " nonzero residuals");
  o.require(concave_fail == 0, std::to_string(concave_fail) + " concavity failures");
  o.note("160 polynomials, exact residual 0, concave at all samples");
  return o;
}

Outcome erasure() {
  Outcome o;
  const ErasureReport pure = landauer_ladder(Spectrum::pure(4));
  const ErasureReport qubit = landauer_ladder(Spectrum::uniform(2));
  for (int m = 1; m <= 4; ++m) {
    o.require(pure.order(m) == 0, "pure state order " + std::to_string(m));
    o.require(qubit.order(m) == 1, "uniform qubit order " + std::to_string(m));
  }
  Rng rng(42);
  int monotone_fail = 0, tight_fail = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const ErasureReport r = landauer_ladder(random_spectrum(rng, 2 + trial % 63));
    for (int m = 2; m <= 4; ++m)
      if (r.order(m) < r.order(m - 1)) ++monotone_fail;
    if (r.tight_third_min_qubits < r.order(3)) ++tight_fail;
  }
  o.require(monotone_fail == 0, std::to_string(monotone_fail) + " ladder decreases");
  o.require(tight_fail == 0, std::to_string(tight_fail) + " tight-below-ladder cases");
  o.note("10^3 spectra, d <= 64");
  return o;
}

Outcome relative_suite() {
  Outcome o;
  Rng rng(42);
  std::uniform_real_distribution<double> root(0.0, 4.0);
  double worst_m = 0.0, worst_p = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = 2 + trial % 5;
    const CommutingPair before(random_spectrum(rng, d), random_spectrum(rng, d));
    const CommutingPair after = apply_stochastic(before, random_stochastic(rng, d));
    for (double v : relative_delta_m(before, after, 4)) worst_m = std::min(worst_m, v);
    const double x = before.s_min();
    for (int n = 1; n <= 4; ++n) {
      std::vector<double> roots(extremal_root_count(n));
      for (double& r : roots) r = root(rng);
      const ExtremalPoly poly = extremal_poly(n, roots);
      worst_p = std::min(worst_p, relative_extremal(after, poly, x) - relative_extremal(before, poly, x));
    }
  }
  o.require(worst_m >= -1e-10, "relative M decrease " + fmt("%.3g", worst_m));
  o.require(worst_p >= -1e-10, "relative extremal decrease " + fmt("%.3g", worst_p));

  std::uniform_real_distribution<double> energy(0.0, 3.0);
  int checked = 0;
  double worst_c = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = 2 + trial % 5;
    std::vector<double> e(d);
    for (double& v : e) v = energy(rng);
    const ThermalSpec th(e, 0.1 + 0.003 * trial);
    const ClausiusReport r = clausius_slack(th, random_spectrum(rng, d));
    if (r.thermomajorizes) {
      ++checked;
      worst_c = std::min(worst_c, r.slack);
    }
  }
  o.require(worst_c >= -1e-10, "Clausius slack " + fmt("%.3g", worst_c));

  const ThermalSpec th({0.0, 0.7, 1.3, 2.0}, 1.1);
  const std::vector<double> drho{0.3, -0.1, -0.15, -0.05};
  Eigen::MatrixXd a(21, 3);
  Eigen::VectorXd y(21);
  for (int i = -10; i <= 10; ++i) {
    const double lam = 1e-4 * i;
    std::vector<double> r(4);
    for (int k = 0; k < 4; ++k) r[k] = th.gibbs()[k] + lam * drho[k];
    a.row(i + 10) << 1.0, lam, lam * lam;
    y[i + 10] = clausius_slack(th, Spectrum::normalize(r, true)).slack;
  }
  const Eigen::Vector3d c = a.colPivHouseholderQr().solve(y);
  o.require(std::abs(c[1]) < 1e-6, "first-law linear coefficient " + fmt("%.3g", c[1]));
  o.require(std::abs(c[2]) * 1e-3 > std::abs(c[1]), "quadratic term does not dominate");
  o.note("10^3 transitions; " + std::to_string(checked) + " relaxations to Gibbs; first-law fit c1=" +
         fmt("%.1e", c[1]) + " c2=" + fmt("%.3g", c[2]));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Fisher-Hartwig constants", constants},
      {"incomparable pair split at degree two", incomparable_pair},
      {"Ising crossing points", crossings},
      {"S-C lattice vs CFT", figure_one},
      {"inequality property suite", inequality_suite},
      {"oracle equivalences", oracles},
      {"extremal solver", extremal_solver},
      {"erasure ladder", erasure},
      {"relative and thermodynamic suite", relative_suite}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("criterion %zu %s: %s | %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
