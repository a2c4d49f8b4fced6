#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "entmono/monotones.hpp"
#include "entmono/spectra.hpp"

namespace entmono {

// Moments and cumulants of ln rho - ln sigma under rho, indexed from order 1.
struct RelativeStats {
  std::vector<double> moments;
  std::vector<double> cumulants;

  double entropy() const { return cumulants.at(0); }
  double variance() const { return cumulants.at(1); }
};

RelativeStats relative_stats(const CommutingPair& pair, int kmax);

// (-1)^n sum_i r_i (ln r_i - ln s_i + ln x - b)^n.
double relative_shifted_moment(const CommutingPair& pair, int n, double b, double x);
// Same value from n-th central differences of e^{-alpha a} sum r^alpha s^{1-alpha}
// at alpha = 1, a = b - ln x, with one Richardson step.
double relative_shifted_moment_fd(const CommutingPair& pair, int n, double b, double x,
                                  double h = 1e-3);

// -sum_i r_i F(ln r_i - ln s_i + ln x).
double relative_extremal(const CommutingPair& pair, const ExtremalPoly& poly, double x);

double petz_renyi(const CommutingPair& pair, double alpha);

struct EntropyProductionBounds {
  double delta_rel_entropy = 0.0;
  double tight = 0.0;
  double relaxed = 0.0;
};

// Entropy production S(rho||sigma) - S(rho'||sigma') and its two lower bounds
// from the second relative monotone, with x = s_min of the initial reference.
EntropyProductionBounds rel_entropy_production_bounds(const CommutingPair& before,
                                                      const CommutingPair& after);

// Delta M_n^rel = M_n(after) - M_n(before) with b_n = n - 1, x = s_min(before).
std::vector<double> relative_delta_m(const CommutingPair& before, const CommutingPair& after,
                                     int nmax);
InequalitySlack relative_inequality3_slack(const CommutingPair& before, const CommutingPair& after);

class ThermalSpec {
 public:
  ThermalSpec(std::vector<double> energies, double beta);

  const std::vector<double>& energies() const noexcept { return energies_; }
  double beta() const noexcept { return beta_; }
  double log_partition() const noexcept { return log_z_; }
  double partition() const;
  double helmholtz() const;
  double e_max() const noexcept { return e_max_; }
  const Spectrum& gibbs() const noexcept { return gibbs_; }
  double mean_energy(const Spectrum& rho) const;

 private:
  std::vector<double> energies_;
  double beta_;
  double log_z_;
  double e_max_;
  Spectrum gibbs_;
};

ThermalSpec parse_thermal_spec(std::string_view json_text);
ThermalSpec read_thermal_spec_file(const std::filesystem::path& path);

struct ClausiusReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double sharp_rhs = 0.0;
  double sharp_slack = 0.0;
  bool thermomajorizes = false;
};

ClausiusReport clausius_slack(const ThermalSpec& th, const Spectrum& rho);

}  // namespace entmono
