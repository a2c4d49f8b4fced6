#pragma once

#include <limits>
#include <string>
#include <string_view>

namespace entmono {

// Inputs to the excited-state CFT curves. The two constants are the O(1)
// terms of the ground-state entropy and capacity.
struct CftParams {
  double gamma = 1.0;
  double c = 1.0;
  double entropy_const = 0.0;   // -c_1'
  double capacity_const = 0.0;  // constant term of the capacity
  double ell = 100.0;
  double L = std::numeric_limits<double>::infinity();

  // XX chain at half filling: gamma = 1 for the current state.
  static CftParams xx();
  // Critical Ising chain: gamma = 1/2 for the fermion state.
  static CftParams ising();
};

// (2 sin(pi x) / n)^{2n} [Gamma((1 + n + n csc(pi x)) / 2) / Gamma((1 - n + n csc(pi x)) / 2)]^2
double f_n(double x, double n);

// S^(n)_O - S^(n)_gs = gamma ln f_n(x) / (1 - n).
double delta_renyi(double x, double n, double gamma);

struct DeltaSC {
  double delta_s = 0.0;
  double delta_c = 0.0;
};

// n-derivatives of gamma ln f_n at n = 1 by central differences with one
// Richardson step.
DeltaSC delta_s_and_c(double x, double gamma, double h = 1e-3);

// The same two derivatives in closed form via digamma and trigamma.
DeltaSC delta_s_and_c_closed(double x, double gamma);

// (S - C) of the excited state in closed form.
double s_minus_c(double x, const CftParams& params);

struct GroundState {
  double entropy = 0.0;
  double capacity = 0.0;
};

// (c/3) ln[(L/pi) sin(pi ell / L)] plus the constants; ln ell when L is infinite.
GroundState gs_entropy_capacity(const CftParams& params);

// Delta M_2 at block length params.ell and system size ell / x.
double delta_m2(double x, const CftParams& params);

struct UpsilonDerivatives {
  double first = 0.0;   // Upsilon'(1)
  double second = 0.0;  // Upsilon''(1)
};

UpsilonDerivatives upsilon_derivatives(double cutoff = 20.0, double tol = 1e-9);

enum class CftQuantity { DeltaS, DeltaC, DeltaS2, DeltaS3, DeltaM2, SMinusC };

CftQuantity parse_cft_quantity(std::string_view name);
std::string to_string(CftQuantity q);

double cft_quantity(CftQuantity q, double x, const CftParams& params);

// First sign change on (lo, hi) found by a coarse scan, refined by bisection
// to |dx| < tol.
double find_crossing(CftQuantity q, const CftParams& params, double lo = 0.01, double hi = 0.5,
                     double tol = 1e-6);

}  // namespace entmono
