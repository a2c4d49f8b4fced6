#include "entmono/cftanalytic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "entmono/error.hpp"
#include "entmono/numerics.hpp"
#include "entmono/special.hpp"

namespace entmono {

namespace {

constexpr double kPi = std::numbers::pi;

void require_ratio(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw Error(ErrorKind::DomainError, "ratio ell/L must lie in (0, 1), got " + std::to_string(x));
  }
}

double log_f_n(double x, double n) {
  require_ratio(x);
  if (!(n > 0.0)) throw Error(ErrorKind::DomainError, "replica index must be positive");
  const double s = std::sin(kPi * x);
  const double csc = 1.0 / s;
  return 2.0 * n * std::log(2.0 * s / n) +
         2.0 * (std::lgamma(0.5 * (1.0 + n + n * csc)) - std::lgamma(0.5 * (1.0 - n + n * csc)));
}

}  // namespace

CftParams CftParams::xx() {
  static const UpsilonDerivatives u = upsilon_derivatives();
  CftParams p;
  p.gamma = 1.0;
  p.c = 1.0;
  // ln(2 |sin k_F|) / 3 with k_F = pi / 2.
  p.entropy_const = std::numbers::ln2 / 3.0 - u.first;
  p.capacity_const = std::numbers::ln2 / 3.0 + u.second;
  return p;
}

CftParams CftParams::ising() {
  CftParams p;
  p.gamma = 0.5;
  p.c = 0.5;
  p.entropy_const = 0.479;
  p.capacity_const = 0.385;
  return p;
}

double f_n(double x, double n) { return std::exp(log_f_n(x, n)); }

double delta_renyi(double x, double n, double gamma) {
  if (std::abs(n - 1.0) < 1e-12) throw Error(ErrorKind::DomainError, "Renyi index must differ from 1");
  return gamma * log_f_n(x, n) / (1.0 - n);
}

DeltaSC delta_s_and_c(double x, double gamma, double h) {
  require_ratio(x);
  auto lf = [&](double n) { return log_f_n(x, n); };
  const double l0 = lf(1.0);
  auto first = [&](double step) { return (lf(1.0 + step) - lf(1.0 - step)) / (2.0 * step); };
  auto second = [&](double step) {
    return (lf(1.0 + step) - 2.0 * l0 + lf(1.0 - step)) / (step * step);
  };
  const double d1 = (4.0 * first(0.5 * h) - first(h)) / 3.0;
  const double d2 = (4.0 * second(0.5 * h) - second(h)) / 3.0;
  return {-gamma * d1, gamma * d2};
}

DeltaSC delta_s_and_c_closed(double x, double gamma) {
  require_ratio(x);
  const double s = std::sin(kPi * x);
  const double z = 0.5 / s;
  const double d1 = 2.0 * (std::log(2.0 * s) + digamma(z) + s);
  const double d2 = 2.0 * (-1.0 + trigamma(z) / s - (1.0 + s) * (1.0 + s));
  return {-gamma * d1, gamma * d2};
}

double s_minus_c(double x, const CftParams& params) {
  const DeltaSC d = delta_s_and_c_closed(x, params.gamma);
  return d.delta_s - d.delta_c + params.entropy_const - params.capacity_const;
}

GroundState gs_entropy_capacity(const CftParams& params) {
  if (!(params.ell > 0.0)) throw Error(ErrorKind::DomainError, "block length must be positive");
  double width = 0.0;
  if (std::isinf(params.L)) {
    width = std::log(params.ell);
  } else {
    if (!(params.ell < params.L)) throw Error(ErrorKind::DomainError, "block must be shorter than the system");
    width = std::log(params.L / kPi * std::sin(kPi * params.ell / params.L));
  }
  const double lead = params.c / 3.0 * width;
  return {lead + params.entropy_const, lead + params.capacity_const};
}

double delta_m2(double x, const CftParams& params) {
  require_ratio(x);
  CftParams p = params;
  p.L = params.ell / x;
  const GroundState gs = gs_entropy_capacity(p);
  const DeltaSC d = delta_s_and_c_closed(x, params.gamma);
  return d.delta_s * (2.0 * gs.entropy + 2.0 + d.delta_s) + d.delta_c;
}

UpsilonDerivatives upsilon_derivatives(double cutoff, double tol) {
  auto im_log_gamma = [](double w) { return log_gamma({0.5, w}).imag(); };
  auto sech2 = [](double w) {
    const double c = std::cosh(kPi * w);
    return 1.0 / (c * c);
  };
  // Both integrands are even, so integrate over [0, cutoff] and double.
  auto k1 = [&](double w) { return -kPi * w * sech2(w) * im_log_gamma(w); };
  auto k2 = [&](double w) {
    const double s2 = sech2(w);
    return (-2.0 * kPi * w * s2 + 2.0 * kPi * kPi * w * w * s2 * std::tanh(kPi * w)) * im_log_gamma(w);
  };
  // Unit panels keep the adaptive rule from accepting the vanishing tail
  // samples of a single coarse Simpson estimate.
  const int panels = std::max(1, static_cast<int>(std::ceil(cutoff)));
  const double width = cutoff / panels;
  UpsilonDerivatives out;
  for (int i = 0; i < panels; ++i) {
    out.first += adaptive_simpson(k1, i * width, (i + 1) * width, tol / panels);
    out.second += adaptive_simpson(k2, i * width, (i + 1) * width, tol / panels);
  }
  out.first *= -4.0;
  out.second *= -4.0;
  return out;
}

CftQuantity parse_cft_quantity(std::string_view name) {
  if (name == "deltaS") return CftQuantity::DeltaS;
  if (name == "deltaC") return CftQuantity::DeltaC;
  if (name == "deltaS2") return CftQuantity::DeltaS2;
  if (name == "deltaS3") return CftQuantity::DeltaS3;
  if (name == "deltaM2") return CftQuantity::DeltaM2;
  if (name == "SminusC") return CftQuantity::SMinusC;
  throw Error(ErrorKind::InvalidArgument, "unknown CFT quantity '" + std::string(name) + "'");
}

std::string to_string(CftQuantity q) {
  switch (q) {
    case CftQuantity::DeltaS: return "deltaS";
    case CftQuantity::DeltaC: return "deltaC";
    case CftQuantity::DeltaS2: return "deltaS2";
    case CftQuantity::DeltaS3: return "deltaS3";
    case CftQuantity::DeltaM2: return "deltaM2";
    case CftQuantity::SMinusC: return "SminusC";
  }
  return "unknown";
}

double cft_quantity(CftQuantity q, double x, const CftParams& params) {
  switch (q) {
    case CftQuantity::DeltaS: return delta_s_and_c_closed(x, params.gamma).delta_s;
    case CftQuantity::DeltaC: return delta_s_and_c_closed(x, params.gamma).delta_c;
    case CftQuantity::DeltaS2: return delta_renyi(x, 2.0, params.gamma);
    case CftQuantity::DeltaS3: return delta_renyi(x, 3.0, params.gamma);
    case CftQuantity::DeltaM2: return delta_m2(x, params);
    case CftQuantity::SMinusC: return s_minus_c(x, params);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown CFT quantity");
}

double find_crossing(CftQuantity q, const CftParams& params, double lo, double hi, double tol) {
  constexpr int kScan = 490;
  auto f = [&](double x) { return cft_quantity(q, x, params); };
  double prev_x = lo;
  double prev = f(lo);
  for (int i = 1; i <= kScan; ++i) {
    const double x = lo + (hi - lo) * i / kScan;
    const double v = f(x);
    if (prev == 0.0) return prev_x;
    if ((prev < 0.0) != (v < 0.0)) return bisect(f, prev_x, x, tol);
    prev_x = x;
    prev = v;
  }
  throw Error(ErrorKind::NoSignChange, to_string(q) + " keeps one sign on (" + std::to_string(lo) +
                                           ", " + std::to_string(hi) + ")");
}

}  // namespace entmono
