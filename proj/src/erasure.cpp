#include "entmono/erasure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "entmono/error.hpp"
#include "entmono/monotones.hpp"

namespace entmono {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kTol = 1e-12;

void require_ladder_order(int m) {
  if (m < 1 || m > 4) throw Error(ErrorKind::InvalidArgument, "erasure ladder order must be in 1..4");
}

double battery_m(int m, int n) {
  const double b = m - 1.0;
  return std::pow(n * kLn2 + b, m) - std::pow(b, m);
}

// Third-order slack at battery size n, or nullopt when the lower-order
// conditions already fail.
struct ThirdSlacks {
  bool admissible = false;
  double tight = 0.0;
  double weak = 0.0;
};

ThirdSlacks third_slacks(const std::vector<double>& m_rho, int n) {
  const double d1 = battery_m(1, n) - m_rho[0];
  const double d2 = battery_m(2, n) - m_rho[1];
  const double d3 = battery_m(3, n) - m_rho[2];
  ThirdSlacks out;
  out.weak = d3 - 3.0 * d2;
  if (d2 < -kTol || d1 < -kTol) return out;
  if (d1 > kTol) {
    out.admissible = true;
    out.tight = out.weak - 0.75 * d2 * d2 / d1;
  } else if (std::abs(d2) <= kTol) {
    out.admissible = true;
    out.tight = out.weak;
  }
  return out;
}

}  // namespace

double landauer_delta_m(const Spectrum& spec, int m, int n) {
  return battery_m(m, n) - shifted_moment(spec, ShiftParams::minimal(m));
}

int landauer_order_bound(const Spectrum& spec, int m) {
  require_ladder_order(m);
  const double b = m - 1.0;
  const double target = shifted_moment(spec, ShiftParams::minimal(m)) + std::pow(b, m);
  const double root = (std::pow(std::max(target, 0.0), 1.0 / m) - b) / kLn2;
  int n = std::max(0, static_cast<int>(std::ceil(root - 1e-9)));
  // Guard the closed form against rounding at integer boundaries.
  while (n > 0 && battery_m(m, n - 1) >= target - std::pow(b, m) - kTol) --n;
  while (battery_m(m, n) < target - std::pow(b, m) - kTol) ++n;
  return n;
}

ThirdOrderBounds landauer_third_tight(const Spectrum& spec) {
  std::vector<double> m_rho(3);
  for (int m = 1; m <= 3; ++m) m_rho[m - 1] = shifted_moment(spec, ShiftParams::minimal(m));
  const int base = landauer_order_bound(spec, 3);
  const int start = std::max(base - 2, 0);

  auto satisfied_tight = [&](int n) {
    const ThirdSlacks s = third_slacks(m_rho, n);
    return s.admissible && s.tight >= -kTol;
  };
  auto satisfied_weak = [&](int n) {
    const ThirdSlacks s = third_slacks(m_rho, n);
    return s.admissible && s.weak >= -kTol;
  };

  ThirdOrderBounds out;
  const int limit = base + 64;
  auto first_from = [&](auto&& pred, int from) {
    for (int n = from; n <= limit; ++n)
      if (pred(n)) return n;
    return -1;
  };

  out.tight = first_from(satisfied_tight, start);
  out.weak = first_from(satisfied_weak, start);

  // The scan assumes the slack is nondecreasing in n; check a few steps past
  // the hit and fall back to a scan from zero if that fails.
  bool monotone = out.tight >= 0;
  if (monotone) {
    double prev = -INFINITY;
    for (int n = start; n <= out.tight + 3; ++n) {
      const ThirdSlacks s = third_slacks(m_rho, n);
      if (!s.admissible) continue;
      if (s.tight < prev - kTol) monotone = false;
      prev = s.tight;
    }
    for (int n = out.tight; n <= out.tight + 3; ++n) monotone = monotone && satisfied_tight(n);
  }
  if (!monotone) {
    out.fallback = true;
    out.tight = first_from(satisfied_tight, 0);
    out.weak = first_from(satisfied_weak, 0);
    if (out.tight < 0) {
      throw Error(ErrorKind::SearchBudgetExceeded, "third-order erasure bound not reached within the scan range");
    }
  }
  if (out.weak < 0) out.weak = out.tight;
  return out;
}

ErasureReport landauer_ladder(const Spectrum& spec, int max_order) {
  require_ladder_order(max_order);
  ErasureReport report;
  for (int m = 1; m <= max_order; ++m) report.per_order_min_qubits.push_back(landauer_order_bound(spec, m));
  int worst = *std::max_element(report.per_order_min_qubits.begin(), report.per_order_min_qubits.end());
  if (max_order >= 3) {
    const ThirdOrderBounds third = landauer_third_tight(spec);
    report.tight_third_min_qubits = third.tight;
    report.weak_third_min_qubits = third.weak;
    report.scan_fallback = third.fallback;
    worst = std::max(worst, third.tight);
  }
  report.work_cost = worst * kLn2;
  return report;
}

double erasure_kappa(int d) {
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "dimension must be at least 2");
  const double ld = std::log(static_cast<double>(d));
  return std::sqrt(2.0 * kLn2) * (12.0 * kLn2 * kLn2 + 9.0 * ld * ld);
}

double erasure_f(double x) { return std::max(std::pow(x, 0.25), std::sqrt(x)); }

MarginalEntropyBound marginal_entropy_bound(const Spectrum& rho_s, const Spectrum& rho_e,
                                            const Spectrum& rho_s_after,
                                            const Spectrum& rho_e_after, double mutual_info,
                                            int d) {
  if (!(mutual_info >= 0.0)) throw Error(ErrorKind::InvalidArgument, "mutual information must be nonnegative");
  const double kappa = erasure_kappa(d);
  const ModularStats s0 = modular_stats(rho_s, 2);
  const ModularStats e0 = modular_stats(rho_e, 2);
  const ModularStats s1 = modular_stats(rho_s_after, 2);
  const ModularStats e1 = modular_stats(rho_e_after, 2);

  MarginalEntropyBound out;
  out.delta_entropy_sum = (s1.entropy() - s0.entropy()) + (e1.entropy() - e0.entropy());
  const double dc_s = s1.capacity() - s0.capacity();
  const double dc_e = e1.capacity() - e0.capacity();
  out.numerator = -dc_s - dc_e - kappa * erasure_f(mutual_info / kLn2);
  const double scale = s0.entropy() + e0.entropy() + 1.0;
  const double radicand = 1.0 + out.numerator / (scale * scale);
  if (radicand >= 0.0) out.bound = scale * (std::sqrt(radicand) - 1.0);
  out.nontrivial = out.numerator > 0.0;
  return out;
}

}  // namespace entmono
