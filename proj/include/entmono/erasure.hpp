#pragma once

#include <optional>
#include <vector>

#include "entmono/spectra.hpp"

namespace entmono {

struct ErasureReport {
  std::vector<int> per_order_min_qubits;  // index m - 1 holds the order-m bound
  int tight_third_min_qubits = 0;
  int weak_third_min_qubits = 0;
  bool scan_fallback = false;             // monotonicity in n was not observed
  double work_cost = 0.0;                 // W / (k_B T) for the largest bound

  int order(int m) const { return per_order_min_qubits.at(m - 1); }
};

// Smallest n with (n ln 2 + m - 1)^m >= M^(m)(rho; m - 1) + (m - 1)^m.
int landauer_order_bound(const Spectrum& spec, int m);

// Delta M_m between an n-qubit maximally mixed battery and rho.
double landauer_delta_m(const Spectrum& spec, int m, int n);

struct ThirdOrderBounds {
  int tight = 0;
  int weak = 0;
  bool fallback = false;
};

ThirdOrderBounds landauer_third_tight(const Spectrum& spec);

ErasureReport landauer_ladder(const Spectrum& spec, int max_order = 4);

double erasure_kappa(int d);
double erasure_f(double x);

struct MarginalEntropyBound {
  double delta_entropy_sum = 0.0;
  double numerator = 0.0;       // -Delta C_S - Delta C_E - kappa f(I / ln 2)
  std::optional<double> bound;  // empty when the radicand is negative
  bool nontrivial = false;
};

MarginalEntropyBound marginal_entropy_bound(const Spectrum& rho_s, const Spectrum& rho_e,
                                            const Spectrum& rho_s_after,
                                            const Spectrum& rho_e_after, double mutual_info,
                                            int d);

}  // namespace entmono
