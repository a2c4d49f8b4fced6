#include "entmono/relative.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "entmono/error.hpp"
#include "json.hpp"

namespace entmono {

namespace {

void require_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorKind::NonpositiveX, "x must be positive, got " + std::to_string(x));
  }
}

// ln r_i - ln s_i on the support of r; callers skip entries with r_i = 0.
double log_ratio(const CommutingPair& pair, std::size_t i) {
  return std::log(pair.r()[i]) - std::log(pair.s()[i]);
}

double log_sum_exp(const std::vector<double>& v) {
  const double m = *std::max_element(v.begin(), v.end());
  double acc = 0.0;
  for (double x : v) acc += std::exp(x - m);
  return m + std::log(acc);
}

}  // namespace

RelativeStats relative_stats(const CommutingPair& pair, int kmax) {
  if (kmax < 1) throw Error(ErrorKind::InvalidArgument, "moment order must be at least 1");
  pair.require_full_rank_reference();
  RelativeStats out;
  out.moments.assign(std::max(kmax, 2), 0.0);
  for (std::size_t i = 0; i < pair.dim(); ++i) {
    const double r = pair.r()[i];
    if (r <= 0.0) continue;
    const double l = log_ratio(pair, i);
    double pw = r;
    for (double& m : out.moments) {
      pw *= l;
      m += pw;
    }
  }
  out.cumulants = cumulants_from_moments(out.moments);
  return out;
}

double relative_shifted_moment(const CommutingPair& pair, int n, double b, double x) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "order must be at least 1");
  pair.require_full_rank_reference();
  require_x(x);
  const double shift = std::log(x) - b;
  double acc = 0.0;
  for (std::size_t i = 0; i < pair.dim(); ++i) {
    const double r = pair.r()[i];
    if (r > 0.0) acc += r * std::pow(log_ratio(pair, i) + shift, n);
  }
  return (n % 2 == 0) ? acc : -acc;
}

double relative_shifted_moment_fd(const CommutingPair& pair, int n, double b, double x, double h) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "order must be at least 1");
  pair.require_full_rank_reference();
  require_x(x);
  if (!(h >= 1e-4 && h <= 1e-1)) {
    throw Error(ErrorKind::StepOutOfRange, "finite-difference step must lie in [1e-4, 1e-1]");
  }
  const double a = b - std::log(x);
  // Closed form of the central n-th difference of e^{-alpha a} sum r^alpha
  // s^{1-alpha}, evaluated per term to avoid cancellation.
  auto central = [&](double step) {
    double acc = 0.0;
    for (std::size_t i = 0; i < pair.dim(); ++i) {
      const double r = pair.r()[i];
      if (r <= 0.0) continue;
      const double c = log_ratio(pair, i) - a;
      acc += r * std::exp(-a) * std::pow(2.0 * std::sinh(0.5 * c * step) / step, n);
    }
    return acc;
  };
  const double d = (4.0 * central(0.5 * h) - central(h)) / 3.0;
  return ((n % 2 == 0) ? 1.0 : -1.0) * std::exp(a) * d;
}

double relative_extremal(const CommutingPair& pair, const ExtremalPoly& poly, double x) {
  pair.require_full_rank_reference();
  require_x(x);
  const double lx = std::log(x);
  double acc = 0.0;
  for (std::size_t i = 0; i < pair.dim(); ++i) {
    const double r = pair.r()[i];
    if (r > 0.0) acc += r * poly.F(log_ratio(pair, i) + lx);
  }
  return -acc;
}

double petz_renyi(const CommutingPair& pair, double alpha) {
  if (!(alpha > 0.0) || std::abs(alpha - 1.0) < 1e-12 || !std::isfinite(alpha)) {
    throw Error(ErrorKind::AlphaOutOfRange, "Renyi order must be positive and different from 1");
  }
  pair.require_full_rank_reference();
  double acc = 0.0;
  for (std::size_t i = 0; i < pair.dim(); ++i) {
    const double r = pair.r()[i];
    if (r > 0.0) acc += std::pow(r, alpha) * std::pow(pair.s()[i], 1.0 - alpha);
  }
  return std::log(acc) / (alpha - 1.0);
}

EntropyProductionBounds rel_entropy_production_bounds(const CommutingPair& before,
                                                      const CommutingPair& after) {
  const double s_min = before.s_min();
  after.require_full_rank_reference();
  const RelativeStats b = relative_stats(before, 2);
  const RelativeStats a = relative_stats(after, 2);
  const double shift = 1.0 - std::log(s_min);
  const double delta_c = b.variance() - a.variance();
  EntropyProductionBounds out;
  out.delta_rel_entropy = b.entropy() - a.entropy();
  out.tight = delta_c / (2.0 * shift - b.entropy() - a.entropy());
  out.relaxed = delta_c / (2.0 * std::sqrt(relative_shifted_moment(before, 2, 1.0, s_min)));
  return out;
}

std::vector<double> relative_delta_m(const CommutingPair& before, const CommutingPair& after,
                                     int nmax) {
  const double s_min = before.s_min();
  std::vector<double> out(nmax);
  for (int n = 1; n <= nmax; ++n) {
    out[n - 1] = relative_shifted_moment(after, n, n - 1.0, s_min) -
                 relative_shifted_moment(before, n, n - 1.0, s_min);
  }
  return out;
}

InequalitySlack relative_inequality3_slack(const CommutingPair& before, const CommutingPair& after) {
  return inequality3_slack_from_delta(relative_delta_m(before, after, 3));
}

namespace {

std::vector<double> gibbs_weights(const std::vector<double>& energies, double beta, double& log_z) {
  if (energies.empty()) throw Error(ErrorKind::InvalidArgument, "energy list is empty");
  if (!std::isfinite(beta)) throw Error(ErrorKind::InvalidArgument, "beta must be finite");
  std::vector<double> expo;
  for (double e : energies) {
    if (!std::isfinite(e)) throw Error(ErrorKind::InvalidArgument, "energies must be finite");
    expo.push_back(-beta * e);
  }
  log_z = log_sum_exp(expo);
  std::vector<double> w;
  for (double x : expo) w.push_back(std::exp(x - log_z));
  return w;
}

}  // namespace

ThermalSpec::ThermalSpec(std::vector<double> energies, double beta)
    : energies_(std::move(energies)),
      beta_(beta),
      log_z_(0.0),
      e_max_(0.0),
      gibbs_(Spectrum::normalize(gibbs_weights(energies_, beta_, log_z_), true)) {
  e_max_ = *std::max_element(energies_.begin(), energies_.end());
}

double ThermalSpec::partition() const { return std::exp(log_z_); }

double ThermalSpec::helmholtz() const {
  if (beta_ == 0.0) throw Error(ErrorKind::DomainError, "free energy is undefined at beta = 0");
  return -log_z_ / beta_;
}

double ThermalSpec::mean_energy(const Spectrum& rho) const {
  if (rho.dim() != energies_.size()) {
    throw Error(ErrorKind::DimMismatch, "spectrum and energy list have different lengths");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i) acc += rho[i] * energies_[i];
  return acc;
}

ThermalSpec parse_thermal_spec(std::string_view json_text) {
  try {
    const auto j = nlohmann::json::parse(json_text);
    for (const auto& [key, _] : j.items()) {
      if (key != "energies" && key != "beta") {
        throw Error(ErrorKind::ParseError, "unknown key '" + key + "' in thermal spec");
      }
    }
    return ThermalSpec(j.at("energies").get<std::vector<double>>(), j.at("beta").get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad thermal spec: ") + e.what());
  }
}

ThermalSpec read_thermal_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_thermal_spec(buf.str());
}

ClausiusReport clausius_slack(const ThermalSpec& th, const Spectrum& rho) {
  if (rho.dim() != th.energies().size()) {
    throw Error(ErrorKind::DimMismatch, "spectrum and energy list have different lengths");
  }
  const Spectrum& gamma = th.gibbs();
  const CommutingPair pair(rho, gamma);
  const RelativeStats rs = relative_stats(pair, 2);
  // beta (E_max - F) = beta E_max + ln Z, which stays finite at beta = 0.
  const double shift = th.beta() * th.e_max() + th.log_partition();
  const double work = th.beta() * (th.mean_energy(gamma) - th.mean_energy(rho));

  ClausiusReport out;
  out.lhs = entropy(gamma) - entropy(rho);
  out.rhs = work + rs.variance() / (2.0 + 2.0 * shift);
  out.slack = out.lhs - out.rhs;
  const double m2 = relative_shifted_moment(pair, 2, 1.0, pair.s_min());
  out.sharp_rhs = work + (m2 > 0.0 ? rs.variance() / (2.0 * std::sqrt(m2)) : 0.0);
  out.sharp_slack = out.lhs - out.sharp_rhs;
  out.thermomajorizes = sigma_majorizes(pair, CommutingPair(gamma, gamma));
  return out;
}

}  // namespace entmono
