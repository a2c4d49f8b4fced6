#include <functional>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entmono/cftanalytic.hpp"
#include "entmono/emit.hpp"
#include "entmono/erasure.hpp"
#include "entmono/error.hpp"
#include "entmono/fermichain.hpp"
#include "entmono/monotones.hpp"
#include "entmono/orderlab.hpp"
#include "entmono/relative.hpp"
#include "entmono/spectra.hpp"
#include "json.hpp"

namespace {

using namespace entmono;

struct Globals {
  std::string format = "csv";
  std::string output;
  std::uint64_t seed = 42;
};

Table report_table() { return Table{{"quantity", "value"}, {}}; }

void put(Table& t, const std::string& name, Cell value) { t.add({name, std::move(value)}); }

void put_slack(Table& t, const std::string& name, const std::function<InequalitySlack()>& f) {
  try {
    const InequalitySlack s = f();
    put(t, name, s.slack);
    put(t, name + "_boundary", s.boundary);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateDenominator) throw;
    put(t, name, std::monostate{});
    put(t, name + "_boundary", std::monostate{});
  }
}

std::string idx_name(const std::string& stem, int k) { return stem + "_" + std::to_string(k); }

// monotones ---------------------------------------------------------------

struct MonotonesOpts {
  std::string spectrum;
  int nmax = 4;
  std::vector<double> roots;
};

void run_monotones(const Globals& g, const MonotonesOpts& o) {
  const Spectrum spec = read_spectrum_file(o.spectrum);
  const ModularStats st = modular_stats(spec, o.nmax);
  Table t = report_table();
  put(t, "dim", static_cast<std::int64_t>(spec.dim()));
  put(t, "entropy", st.entropy());
  put(t, "capacity", st.capacity());
  for (int k = 1; k <= o.nmax; ++k) put(t, idx_name("moment", k), st.moment(k));
  for (int k = 1; k <= o.nmax; ++k) put(t, idx_name("cumulant", k), st.cumulant(k));
  for (int k = 1; k <= o.nmax; ++k) put(t, idx_name("M", k), shifted_moment(spec, ShiftParams::minimal(k)));
  for (int k = 1; k <= o.nmax; ++k) {
    std::vector<double> roots(extremal_root_count(k), 0.0);
    for (std::size_t i = 0; i < roots.size() && i < o.roots.size(); ++i) roots[i] = o.roots[i];
    put(t, idx_name("PE", k), normalized_extremal_value(spec, extremal_poly(k, roots)));
  }
  put(t, "renyi_2", renyi(spec, 2.0));
  put(t, "renyi_3", renyi(spec, 3.0));
  emit(t, parse_format(g.format), g.output);
}

// majorize ----------------------------------------------------------------

struct MajorizeOpts {
  std::string rho;
  std::string sigma;
  int nmax = 4;
};

void run_majorize(const Globals& g, const MajorizeOpts& o) {
  const Spectrum rho = read_spectrum_file(o.rho);
  const Spectrum sigma = read_spectrum_file(o.sigma);
  const int nmax = std::max(o.nmax, 4);
  const std::vector<double> dm = delta_m(rho, sigma, nmax);
  Table t = report_table();
  put(t, "verdict", to_string(majorization_order(rho, sigma)));
  put(t, "rho_majorizes_sigma", majorizes(rho, sigma));
  put(t, "sigma_majorizes_rho", majorizes(sigma, rho));
  put(t, "delta_S", entropy(sigma) - entropy(rho));
  put(t, "delta_C", capacity(sigma) - capacity(rho));
  for (int k = 1; k <= nmax; ++k) put(t, idx_name("delta_M", k), dm[k - 1]);
  put(t, "delta_PE_2", dm[1]);
  put_slack(t, "inequality3_slack", [&] { return inequality3_slack_from_delta(dm); });
  put_slack(t, "inequality4_slack", [&] { return inequality4_slack_from_delta(dm); });
  put(t, "entropy_capacity_slack", entropy_capacity_slack(rho, sigma));
  emit(t, parse_format(g.format), g.output);
}

// relative ----------------------------------------------------------------

struct RelativeOpts {
  std::string rho;
  std::string sigma;
  std::string rho_after;
  std::string sigma_after;
  int nmax = 4;
  double alpha = 2.0;
};

void run_relative(const Globals& g, const RelativeOpts& o) {
  const CommutingPair before(read_spectrum_file(o.rho), read_spectrum_file(o.sigma));
  const RelativeStats rs = relative_stats(before, o.nmax);
  const double x = before.s_min();
  Table t = report_table();
  put(t, "rel_entropy", rs.entropy());
  put(t, "rel_variance", rs.variance());
  for (int k = 1; k <= o.nmax; ++k) put(t, idx_name("rel_moment", k), rs.moments[k - 1]);
  put(t, "petz_renyi", petz_renyi(before, o.alpha));
  put(t, "s_min", x);
  for (int k = 1; k <= o.nmax; ++k) put(t, idx_name("rel_M", k), relative_shifted_moment(before, k, k - 1.0, x));
  if (!o.rho_after.empty() || !o.sigma_after.empty()) {
    if (o.rho_after.empty() || o.sigma_after.empty()) {
      throw Error(ErrorKind::InvalidArgument, "--rho-after and --sigma-after must be given together");
    }
    const CommutingPair after(read_spectrum_file(o.rho_after), read_spectrum_file(o.sigma_after));
    const EntropyProductionBounds b = rel_entropy_production_bounds(before, after);
    put(t, "sigma_majorizes", sigma_majorizes(before, after));
    put(t, "delta_rel_entropy", b.delta_rel_entropy);
    put(t, "bound_tight", b.tight);
    put(t, "bound_relaxed", b.relaxed);
    const std::vector<double> dm = relative_delta_m(before, after, 3);
    for (int k = 1; k <= 3; ++k) put(t, idx_name("delta_rel_M", k), dm[k - 1]);
    put_slack(t, "rel_inequality3_slack", [&] { return relative_inequality3_slack(before, after); });
  }
  emit(t, parse_format(g.format), g.output);
}

// clausius ----------------------------------------------------------------

struct ClausiusOpts {
  std::string thermal;
  std::string rho;
};

void run_clausius(const Globals& g, const ClausiusOpts& o) {
  const ThermalSpec th = read_thermal_spec_file(o.thermal);
  const ClausiusReport r = clausius_slack(th, read_spectrum_file(o.rho));
  Table t = report_table();
  put(t, "beta", th.beta());
  put(t, "log_partition", th.log_partition());
  put(t, "lhs", r.lhs);
  put(t, "rhs", r.rhs);
  put(t, "slack", r.slack);
  put(t, "sharp_rhs", r.sharp_rhs);
  put(t, "sharp_slack", r.sharp_slack);
  put(t, "thermomajorizes", r.thermomajorizes);
  emit(t, parse_format(g.format), g.output);
}

// erasure -----------------------------------------------------------------

struct ErasureOpts {
  std::string rho;
  int max_order = 4;
  std::string env;
  std::string system_after;
  std::string env_after;
  double mutual_info = 0.0;
  int dim = 0;
};

void run_erasure(const Globals& g, const ErasureOpts& o) {
  const Spectrum rho = read_spectrum_file(o.rho);
  const ErasureReport r = landauer_ladder(rho, o.max_order);
  Table t = report_table();
  for (int m = 1; m <= o.max_order; ++m) put(t, idx_name("min_qubits_order", m), static_cast<std::int64_t>(r.order(m)));
  if (o.max_order >= 3) {
    put(t, "min_qubits_third_tight", static_cast<std::int64_t>(r.tight_third_min_qubits));
    put(t, "min_qubits_third_weak", static_cast<std::int64_t>(r.weak_third_min_qubits));
  }
  put(t, "work_cost", r.work_cost);
  const bool any = !o.env.empty() || !o.system_after.empty() || !o.env_after.empty();
  if (any) {
    if (o.env.empty() || o.system_after.empty() || o.env_after.empty() || o.dim == 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "marginal bound needs --env, --system-after, --env-after and --dim");
    }
    const MarginalEntropyBound m =
        marginal_entropy_bound(rho, read_spectrum_file(o.env), read_spectrum_file(o.system_after),
                               read_spectrum_file(o.env_after), o.mutual_info, o.dim);
    put(t, "kappa", erasure_kappa(o.dim));
    put(t, "marginal_delta_entropy", m.delta_entropy_sum);
    put(t, "marginal_numerator", m.numerator);
    put(t, "marginal_bound", m.bound ? Cell{*m.bound} : Cell{std::monostate{}});
    put(t, "marginal_bound_nontrivial", m.nontrivial);
  }
  emit(t, parse_format(g.format), g.output);
}

// chain -------------------------------------------------------------------

struct ChainOpts {
  std::string model = "xx";
  int N = 200;
  int ell_min = 10;
  int ell_max = 100;
  int ell_step = 10;
  std::vector<std::string> states;
};

void run_chain(const Globals& g, const ChainOpts& o) {
  const ChainModel model = parse_chain_model(o.model);
  std::vector<std::string> states = o.states;
  if (states.empty()) {
    states = model == ChainModel::XX ? std::vector<std::string>{"gs", "current"}
                                     : std::vector<std::string>{"gs", "psi"};
  }
  if (o.ell_step < 1) throw Error(ErrorKind::InvalidArgument, "--ell-step must be positive");
  Table t{{"model", "N", "ell", "state", "S", "C", "C3", "C4", "M2", "M3", "renyi2", "renyi3"}, {}};
  for (const std::string& name : states) {
    const std::vector<int> occ = preset_state(model, o.N, parse_preset_state(name));
    for (int ell = o.ell_min; ell <= o.ell_max; ell += o.ell_step) {
      const BlockOccupations b = block_occupations(ChainSpec{model, o.N, occ, ell});
      const FreeFermionStats s = ff_stats(b, 4);
      t.add({to_string(model), static_cast<std::int64_t>(o.N), static_cast<std::int64_t>(ell), name,
             s.stats.entropy(), s.stats.capacity(), s.stats.cumulant(3), s.stats.cumulant(4),
             s.shifted_moment(2), s.shifted_moment(3), ff_renyi(b, 2.0), ff_renyi(b, 3.0)});
    }
  }
  emit(t, parse_format(g.format), g.output);
}

// cft / scan --------------------------------------------------------------

struct CftOpts {
  std::string quantity = "SminusC";
  std::string model = "xx";
  std::optional<double> gamma;
  std::optional<double> entropy_const;
  std::optional<double> capacity_const;
  double ell = 100.0;
  double x_min = 0.01;
  double x_max = 0.5;
  int points = 50;
  bool scan = false;
};

CftParams cft_params(const std::string& model, std::optional<double> gamma,
                     std::optional<double> entropy_const, std::optional<double> capacity_const,
                     double ell) {
  CftParams p = parse_chain_model(model) == ChainModel::XX ? CftParams::xx() : CftParams::ising();
  if (gamma) p.gamma = *gamma;
  if (entropy_const) p.entropy_const = *entropy_const;
  if (capacity_const) p.capacity_const = *capacity_const;
  p.ell = ell;
  return p;
}

void run_cft(const Globals& g, const CftOpts& o) {
  const CftQuantity q = parse_cft_quantity(o.quantity);
  const CftParams p = cft_params(o.model, o.gamma, o.entropy_const, o.capacity_const, o.ell);
  if (o.scan) {
    Table t = report_table();
    put(t, "quantity", to_string(q));
    put(t, "gamma", p.gamma);
    put(t, "ell", p.ell);
    put(t, "crossing", find_crossing(q, p));
    emit(t, parse_format(g.format), g.output);
    return;
  }
  if (o.points < 2) throw Error(ErrorKind::InvalidArgument, "--points must be at least 2");
  Table t{{"x", "quantity", "value", "gamma", "model", "ell"}, {}};
  for (int i = 0; i < o.points; ++i) {
    const double x = o.x_min + (o.x_max - o.x_min) * i / (o.points - 1);
    t.add({x, to_string(q), cft_quantity(q, x, p), p.gamma, o.model, p.ell});
  }
  emit(t, parse_format(g.format), g.output);
}

struct ScanOpts {
  std::vector<std::string> quantities{"deltaS", "deltaS2", "deltaS3", "deltaM2"};
  std::string model = "ising";
  std::optional<double> gamma;
  std::optional<double> entropy_const;
  std::optional<double> capacity_const;
  std::vector<double> ells{100.0, 200.0};
};

void run_scan(const Globals& g, const ScanOpts& o) {
  Table t{{"quantity", "gamma", "ell", "crossing", "status"}, {}};
  for (const std::string& name : o.quantities) {
    const CftQuantity q = parse_cft_quantity(name);
    // Only the ladder quantity depends on the block length.
    const std::vector<double> ells = q == CftQuantity::DeltaM2 ? o.ells : std::vector<double>{o.ells.front()};
    for (double ell : ells) {
      const CftParams p = cft_params(o.model, o.gamma, o.entropy_const, o.capacity_const, ell);
      const Cell ell_cell = q == CftQuantity::DeltaM2 ? Cell{ell} : Cell{std::monostate{}};
      try {
        t.add({to_string(q), p.gamma, ell_cell, find_crossing(q, p), std::string("ok")});
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoSignChange) throw;
        t.add({to_string(q), p.gamma, ell_cell, std::monostate{}, std::string("no_sign_change")});
      }
    }
  }
  emit(t, parse_format(g.format), g.output);
}

// census ------------------------------------------------------------------

struct CensusOpts {
  int dim = 3;
  std::int64_t samples = 10000;
  int nmax = 2;
  std::string family = "msequence";
  bool allow_high = false;
};

void run_census(const Globals& g, const CensusOpts& o) {
  const CensusResult r = order_census(o.dim, o.samples, g.seed, o.nmax, parse_cone_family(o.family), o.allow_high);
  nlohmann::ordered_json j;
  j["dim"] = r.dim;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["family"] = to_string(r.family);
  j["levels"] = nlohmann::ordered_json::array();
  const Order all[] = {Order::Forward, Order::Backward, Order::Incomparable, Order::Equal};
  for (const CensusLevel& level : r.levels) {
    nlohmann::ordered_json lj;
    lj["n"] = level.n;
    nlohmann::ordered_json conf = nlohmann::ordered_json::object();
    for (Order m : all) {
      nlohmann::ordered_json row = nlohmann::ordered_json::object();
      for (Order c : all) row[to_string(c)] = level.confusion[static_cast<int>(m)][static_cast<int>(c)];
      conf[to_string(m)] = row;
    }
    lj["confusion"] = conf;
    lj["cone_ordered_incomparable"] = level.cone_ordered_incomparable;
    lj["soundness_violations"] = level.soundness_violations;
    j["levels"].push_back(lj);
  }
  write_output(j.dump(2) + "\n", g.output);
}

// constants ---------------------------------------------------------------

struct ConstantsOpts {
  double cutoff = 20.0;
  double tol = 1e-9;
};

void run_constants(const Globals& g, const ConstantsOpts& o) {
  const UpsilonDerivatives u = upsilon_derivatives(o.cutoff, o.tol);
  const double split = std::log(2.0) / 3.0;
  Table t = report_table();
  put(t, "minus_upsilon_prime", -u.first);
  put(t, "upsilon_double_prime", u.second);
  put(t, "xx_entropy_const", split - u.first);
  put(t, "xx_capacity_const", split + u.second);
  const CftParams ising = CftParams::ising();
  put(t, "ising_entropy_const", ising.entropy_const);
  put(t, "ising_capacity_const", ising.capacity_const);
  emit(t, parse_format(g.format), g.output);
}

void report_error(const std::string& kind, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement monotones, majorization tests and free-fermion checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with option values");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("-o,--output", g.output, "Output file (stdout when omitted)");
  app.add_option("--seed", g.seed, "Seed for sampled experiments")->capture_default_str();

  MonotonesOpts mono;
  auto* c_mono = app.add_subcommand("monotones", "Modular moments, cumulants, M and P_E sequences of a spectrum");
  c_mono->add_option("spectrum", mono.spectrum, "Spectrum file")->required()->check(CLI::ExistingFile);
  c_mono->add_option("--nmax", mono.nmax, "Highest order")->check(CLI::Range(2, 8))->capture_default_str();
  c_mono->add_option("--roots", mono.roots, "Extremal roots a_i >= 0 (zero when omitted)");

  MajorizeOpts maj;
  auto* c_maj = app.add_subcommand("majorize", "Majorization verdict and monotone ladder for two spectra");
  c_maj->add_option("rho", maj.rho, "First spectrum file")->required()->check(CLI::ExistingFile);
  c_maj->add_option("sigma", maj.sigma, "Second spectrum file")->required()->check(CLI::ExistingFile);
  c_maj->add_option("--nmax", maj.nmax, "Highest ladder order")->check(CLI::Range(4, 8))->capture_default_str();

  RelativeOpts rel;
  auto* c_rel = app.add_subcommand("relative", "Relative quantifiers of a commuting pair");
  c_rel->add_option("rho", rel.rho, "State spectrum file")->required()->check(CLI::ExistingFile);
  c_rel->add_option("sigma", rel.sigma, "Reference spectrum file (same eigenbasis order)")->required()->check(CLI::ExistingFile);
  c_rel->add_option("--rho-after", rel.rho_after, "State after the transition")->check(CLI::ExistingFile);
  c_rel->add_option("--sigma-after", rel.sigma_after, "Reference after the transition")->check(CLI::ExistingFile);
  c_rel->add_option("--nmax", rel.nmax, "Highest order")->check(CLI::Range(2, 8))->capture_default_str();
  c_rel->add_option("--alpha", rel.alpha, "Petz-Renyi order")->capture_default_str();

  ClausiusOpts cl;
  auto* c_cl = app.add_subcommand("clausius", "Finite-size Clausius inequality for a thermal reference");
  c_cl->add_option("thermal", cl.thermal, "JSON file {\"energies\": [...], \"beta\": b}")->required()->check(CLI::ExistingFile);
  c_cl->add_option("rho", cl.rho, "State spectrum file paired with the energies")->required()->check(CLI::ExistingFile);

  ErasureOpts er;
  auto* c_er = app.add_subcommand("erasure", "Landauer erasure ladder and marginal entropy bound");
  c_er->add_option("rho", er.rho, "Spectrum to erase (system spectrum for the marginal bound)")->required()->check(CLI::ExistingFile);
  c_er->add_option("--max-order", er.max_order, "Highest ladder order")->check(CLI::Range(1, 4))->capture_default_str();
  c_er->add_option("--env", er.env, "Environment spectrum")->check(CLI::ExistingFile);
  c_er->add_option("--system-after", er.system_after, "System spectrum after the process")->check(CLI::ExistingFile);
  c_er->add_option("--env-after", er.env_after, "Environment spectrum after the process")->check(CLI::ExistingFile);
  c_er->add_option("--mutual-info", er.mutual_info, "Initial system-environment mutual information (nats)")->capture_default_str();
  c_er->add_option("--dim", er.dim, "Dimension entering kappa");

  ChainOpts ch;
  auto* c_ch = app.add_subcommand("chain", "Free-fermion chain sweep over block lengths");
  c_ch->add_option("--model", ch.model, "xx or ising")->check(CLI::IsMember({"xx", "ising"}))->capture_default_str();
  c_ch->add_option("--N", ch.N, "Number of sites")->capture_default_str();
  c_ch->add_option("--ell-min", ch.ell_min, "Smallest block")->capture_default_str();
  c_ch->add_option("--ell-max", ch.ell_max, "Largest block")->capture_default_str();
  c_ch->add_option("--ell-step", ch.ell_step, "Block stride")->capture_default_str();
  c_ch->add_option("--state", ch.states, "gs, current (xx) or psi (ising); all valid states when omitted");

  CftOpts cft;
  auto* c_cft = app.add_subcommand("cft", "Closed-form CFT curves");
  c_cft->add_option("--quantity", cft.quantity, "deltaS, deltaC, deltaS2, deltaS3, deltaM2 or SminusC")->capture_default_str();
  c_cft->add_option("--model", cft.model, "Constant preset: xx or ising")->check(CLI::IsMember({"xx", "ising"}))->capture_default_str();
  c_cft->add_option("--gamma", cft.gamma, "Exponent override");
  c_cft->add_option("--entropy-const", cft.entropy_const, "Ground-state entropy constant override");
  c_cft->add_option("--capacity-const", cft.capacity_const, "Ground-state capacity constant override");
  c_cft->add_option("--ell", cft.ell, "Block length for cutoff-dependent quantities")->capture_default_str();
  c_cft->add_option("--x-min", cft.x_min, "First ratio")->capture_default_str();
  c_cft->add_option("--x-max", cft.x_max, "Last ratio")->capture_default_str();
  c_cft->add_option("--points", cft.points, "Number of ratios")->capture_default_str();
  c_cft->add_flag("--scan", cft.scan, "Report the sign change on (0.01, 0.5) instead of the curve");

  ScanOpts sc;
  auto* c_sc = app.add_subcommand("scan", "Crossing points of the excited-state differences");
  c_sc->add_option("--quantity", sc.quantities, "Quantities to scan")->capture_default_str();
  c_sc->add_option("--model", sc.model, "Constant preset: xx or ising")->check(CLI::IsMember({"xx", "ising"}))->capture_default_str();
  c_sc->add_option("--gamma", sc.gamma, "Exponent override");
  c_sc->add_option("--entropy-const", sc.entropy_const, "Ground-state entropy constant override");
  c_sc->add_option("--capacity-const", sc.capacity_const, "Ground-state capacity constant override");
  c_sc->add_option("--ell", sc.ells, "Block lengths for deltaM2")->capture_default_str();

  CensusOpts ce;
  auto* c_ce = app.add_subcommand("census", "Cone orders versus majorization on sampled spectra (JSON)");
  c_ce->add_option("--dim", ce.dim, "Spectrum dimension")->capture_default_str();
  c_ce->add_option("--samples", ce.samples, "Number of sampled pairs")->capture_default_str();
  c_ce->add_option("--nmax", ce.nmax, "Highest monotone degree")->check(CLI::Range(1, 6))->capture_default_str();
  c_ce->add_option("--family", ce.family, "msequence or extremal")->check(CLI::IsMember({"msequence", "extremal"}))->capture_default_str();
  c_ce->add_flag("--allow-high-extremal", ce.allow_high, "Permit extremal degrees >= 5");

  ConstantsOpts co;
  auto* c_co = app.add_subcommand("constants", "Fisher-Hartwig constants of the XX chain");
  c_co->add_option("--cutoff", co.cutoff, "Quadrature cutoff")->capture_default_str();
  c_co->add_option("--tol", co.tol, "Quadrature tolerance")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("UsageError", e.what());
    return 2;
  }

  try {
    if (*c_mono) run_monotones(g, mono);
    else if (*c_maj) run_majorize(g, maj);
    else if (*c_rel) run_relative(g, rel);
    else if (*c_cl) run_clausius(g, cl);
    else if (*c_er) run_erasure(g, er);
    else if (*c_ch) run_chain(g, ch);
    else if (*c_cft) run_cft(g, cft);
    else if (*c_sc) run_scan(g, sc);
    else if (*c_ce) run_census(g, ce);
    else if (*c_co) run_constants(g, co);
  } catch (const Error& e) {
    report_error(to_string(e.kind()), e.what());
    return is_numeric_failure(e.kind()) ? 3 : 2;
  } catch (const std::exception& e) {
    report_error("InternalError", e.what());
    return 3;
  }
  return 0;
}
