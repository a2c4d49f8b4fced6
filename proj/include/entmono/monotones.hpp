#pragma once

#include <span>
#include <vector>

#include "entmono/spectra.hpp"

namespace entmono {

// Moments mu_k = Tr[rho (-ln rho)^k] and cumulants C_k of the modular
// Hamiltonian; vectors are indexed from order 1 (element 0 is mu_1).
struct ModularStats {
  std::vector<double> moments;
  std::vector<double> cumulants;

  int order() const noexcept { return static_cast<int>(moments.size()); }
  double moment(int k) const { return moments.at(k - 1); }
  double cumulant(int k) const { return cumulants.at(k - 1); }
  double entropy() const { return cumulants.at(0); }
  double capacity() const { return cumulants.at(1); }
};

std::vector<double> modular_moments(const Spectrum& spec, int kmax);
std::vector<double> cumulants_from_moments(std::span<const double> moments);
std::vector<double> moments_from_cumulants(std::span<const double> cumulants);
ModularStats modular_stats(const Spectrum& spec, int kmax);

double entropy(const Spectrum& spec);
double capacity(const Spectrum& spec);
double renyi(const Spectrum& spec, double alpha);

struct ShiftParams {
  int n = 1;
  double b = 0.0;

  // Monotonicity under majorization is only guaranteed for b >= n - 1.
  bool concave() const noexcept { return b >= n - 1; }
  static ShiftParams minimal(int n) { return {n, static_cast<double>(n - 1)}; }
};

// Tr[rho (-ln rho + b)^n] - b^n.
double shifted_moment(const Spectrum& spec, ShiftParams p);
// Same quantity from the moments mu_1..mu_n by binomial expansion.
double shifted_moment_from_moments(std::span<const double> moments, ShiftParams p);
// n-th derivative of e^{-alpha b} Tr rho^alpha at alpha = 1 by central
// differences with one Richardson step.
double shifted_moment_fd(const Spectrum& spec, ShiftParams p, double h = 1e-3);

// mu_n + sum_{j=1}^{n-1} gamma_j mu_j + gamma_0.
struct GammaMonotone {
  int n = 1;
  std::vector<double> gammas;  // gamma_0 .. gamma_{n-1}; missing entries are zero
};

double gamma_monotone(const Spectrum& spec, const GammaMonotone& gm);
// Samples d^2/dx^2 [x F_n(x)] on 10^3 log-spaced points of (0, 1].
bool concavity_check(const GammaMonotone& gm);

// F with F' + F'' = G, where G = prod (y + a_i)^2 when n - 1 is even and
// G = -y prod (y + a_i)^2 when n - 1 is odd. Coefficients are solved in exact
// rational arithmetic and then rounded.
struct ExtremalPoly {
  int n = 1;
  std::vector<double> roots;
  std::vector<double> fcoeffs;  // f_0 .. f_n, f_0 = 0
  std::vector<double> gcoeffs;  // g_0 .. g_{n-1}

  bool odd_parity() const noexcept { return (n - 1) % 2 == 1; }
  double F(double y) const;
  double G(double y) const;
};

int extremal_root_count(int n);
ExtremalPoly extremal_poly(int n, std::vector<double> roots);

// Largest |(j+1) f_{j+1} + (j+2)(j+1) f_{j+2} - g_j| evaluated in exact
// rationals for the polynomial built from `roots`; zero for a correct solver.
double extremal_identity_residual(int n, const std::vector<double>& roots);

// Second-difference test of x -> -x F(ln x) on 10^3 log-spaced points.
bool extremal_concavity_check(const ExtremalPoly& poly);

// Tr[rho F(ln rho)].
double extremal_value(const Spectrum& spec, const ExtremalPoly& poly);
// n * Tr[rho F(ln rho)], which fixes the leading coefficient of F to +-1 and
// makes the n = 2 member equal to -M^(2)(rho; 1).
double normalized_extremal_value(const Spectrum& spec, const ExtremalPoly& poly);

// Delta M_n = M^(n)(sigma; n-1) - M^(n)(rho; n-1), n = 1..nmax.
std::vector<double> delta_m(const Spectrum& rho, const Spectrum& sigma, int nmax);

struct InequalitySlack {
  double slack = 0.0;
  double vertex = 0.0;    // unconstrained minimizer of the quadratic in a
  bool boundary = false;  // minimum taken at a = 0
};

// Minimum over a >= 0 of n [P_E(rho) - P_E(sigma)] for n = 3 and n = 4, from
// the Delta M ladder.
InequalitySlack inequality3_slack_from_delta(std::span<const double> dm);
InequalitySlack inequality4_slack_from_delta(std::span<const double> dm);
InequalitySlack inequality3_slack(const Spectrum& rho, const Spectrum& sigma);
InequalitySlack inequality4_slack(const Spectrum& rho, const Spectrum& sigma);

// (S(sigma) - S(rho)) (S(rho) + S(sigma) + 2) - (C(rho) - C(sigma)).
double entropy_capacity_slack(const Spectrum& rho, const Spectrum& sigma);

struct SearchConfig {
  int grid_points = 32;
  double a_max = 0.0;  // 0 selects 2 (S(rho) + S(sigma) + n)
  int max_iterations = 100;
  double step_tol = 1e-8;
  long long max_grid_evaluations = 2'000'000;
};

struct OptimizedSlack {
  double slack = 0.0;
  std::vector<double> roots;
  bool budget_exceeded = false;
};

// Minimum over root vectors in [0, a_max]^k of n [P_E(rho) - P_E(sigma)],
// by a coarse grid followed by coordinate descent.
OptimizedSlack optimized_extremal_slack(const Spectrum& rho, const Spectrum& sigma, int n,
                                        const SearchConfig& cfg = {});

// Tr[rho (ln rho)^j] for j = 0..n, the building block for fast evaluation of
// Tr[rho F(ln rho)] across many root vectors.
std::vector<double> log_power_sums(const Spectrum& spec, int n);

}  // namespace entmono
