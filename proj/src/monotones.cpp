#include "entmono/monotones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "entmono/error.hpp"

namespace entmono {

namespace {

using Rational = boost::multiprecision::cpp_rational;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_order(int k, const char* what) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be at least 1");
}

template <typename T>
std::vector<T> poly_mul(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

template <typename T>
std::vector<T> extremal_g(int n, std::span<const T> roots) {
  std::vector<T> g{T(1)};
  for (const T& a : roots) g = poly_mul(g, std::vector<T>{a * a, T(2) * a, T(1)});
  if ((n - 1) % 2 == 1) g = poly_mul(g, std::vector<T>{T(0), T(-1)});
  return g;
}

// Top-down solve of (j+1) f_{j+1} + (j+2)(j+1) f_{j+2} = g_j.
template <typename T>
std::vector<T> extremal_f(int n, const std::vector<T>& g) {
  std::vector<T> f(n + 2, T(0));
  for (int j = n - 1; j >= 0; --j) {
    f[j + 1] = (g[j] - T((j + 2) * (j + 1)) * f[j + 2]) / T(j + 1);
  }
  f.resize(n + 1);
  return f;
}

void check_roots(int n, const std::vector<double>& roots) {
  require_order(n, "extremal degree");
  const int k = extremal_root_count(n);
  if (static_cast<int>(roots.size()) != k) {
    throw Error(ErrorKind::InvalidArgument, "degree " + std::to_string(n) + " needs " +
                                                std::to_string(k) + " roots, got " +
                                                std::to_string(roots.size()));
  }
  for (double a : roots) {
    if (!(a >= 0.0)) throw Error(ErrorKind::NegativeRoot, "extremal root " + std::to_string(a) + " is negative");
  }
}

double horner(std::span<const double> c, double y) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + *it;
  return acc;
}

std::vector<double> fcoeffs_fast(int n, std::span<const double> roots) {
  return extremal_f<double>(n, extremal_g<double>(n, roots));
}

double dot_diff(std::span<const double> f, std::span<const double> lr,
                std::span<const double> ls) {
  double acc = 0.0;
  for (std::size_t j = 1; j < f.size(); ++j) acc += f[j] * (lr[j] - ls[j]);
  return acc;
}

}  // namespace

std::vector<double> modular_moments(const Spectrum& spec, int kmax) {
  require_order(kmax, "moment order");
  std::vector<double> mu(kmax, 0.0);
  for (double p : spec.probs()) {
    if (p <= 0.0) continue;
    const double u = -std::log(p);
    double pw = p;
    for (int k = 0; k < kmax; ++k) {
      pw *= u;
      mu[k] += pw;
    }
  }
  return mu;
}

std::vector<double> cumulants_from_moments(std::span<const double> moments) {
  const int n = static_cast<int>(moments.size());
  std::vector<double> c(n, 0.0);
  auto mu = [&](int k) { return k == 0 ? 1.0 : moments[k - 1]; };
  for (int m = 1; m <= n; ++m) {
    double acc = mu(m);
    for (int k = 1; k < m; ++k) acc -= binomial(m - 1, k - 1) * c[k - 1] * mu(m - k);
    c[m - 1] = acc;
  }
  return c;
}

std::vector<double> moments_from_cumulants(std::span<const double> cumulants) {
  const int n = static_cast<int>(cumulants.size());
  std::vector<double> mu(n + 1, 0.0);
  mu[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    double acc = 0.0;
    for (int k = 1; k <= m; ++k) acc += binomial(m - 1, k - 1) * cumulants[k - 1] * mu[m - k];
    mu[m] = acc;
  }
  return {mu.begin() + 1, mu.end()};
}

ModularStats modular_stats(const Spectrum& spec, int kmax) {
  ModularStats s;
  s.moments = modular_moments(spec, std::max(kmax, 2));
  s.cumulants = cumulants_from_moments(s.moments);
  return s;
}

double entropy(const Spectrum& spec) { return modular_moments(spec, 1)[0]; }

double capacity(const Spectrum& spec) { return modular_stats(spec, 2).capacity(); }

double renyi(const Spectrum& spec, double alpha) {
  if (!(alpha > 0.0) || std::abs(alpha - 1.0) < 1e-12 || !std::isfinite(alpha)) {
    throw Error(ErrorKind::AlphaOutOfRange, "Renyi order must be positive and different from 1");
  }
  double acc = 0.0;
  for (double p : spec.probs())
    if (p > 0.0) acc += std::pow(p, alpha);
  return std::log(acc) / (1.0 - alpha);
}

double shifted_moment(const Spectrum& spec, ShiftParams p) {
  require_order(p.n, "shifted moment order");
  double acc = 0.0;
  for (double x : spec.probs())
    if (x > 0.0) acc += x * std::pow(-std::log(x) + p.b, p.n);
  return acc - std::pow(p.b, p.n);
}

double shifted_moment_from_moments(std::span<const double> moments, ShiftParams p) {
  require_order(p.n, "shifted moment order");
  if (static_cast<int>(moments.size()) < p.n) {
    throw Error(ErrorKind::InvalidArgument, "not enough moments for the requested order");
  }
  double acc = 0.0;
  for (int k = 1; k <= p.n; ++k) acc += binomial(p.n, k) * std::pow(p.b, p.n - k) * moments[k - 1];
  return acc;
}

double shifted_moment_fd(const Spectrum& spec, ShiftParams p, double h) {
  require_order(p.n, "shifted moment order");
  if (!(h >= 1e-4 && h <= 1e-1)) {
    throw Error(ErrorKind::StepOutOfRange, "finite-difference step must lie in [1e-4, 1e-1]");
  }
  // The central n-th difference of e^{alpha c} at alpha = 1 equals
  // e^{c} (2 sinh(c step / 2))^n; summing it per eigenvalue gives the same
  // stencil value as differencing k_alpha without the cancellation.
  auto central = [&](double step) {
    double acc = 0.0;
    for (double x : spec.probs()) {
      if (x <= 0.0) continue;
      const double c = std::log(x) - p.b;
      acc += x * std::exp(-p.b) * std::pow(2.0 * std::sinh(0.5 * c * step) / step, p.n);
    }
    return acc;
  };
  const double d = (4.0 * central(0.5 * h) - central(h)) / 3.0;
  const double sign = (p.n % 2 == 0) ? 1.0 : -1.0;
  return std::exp(p.b) * sign * d - std::pow(p.b, p.n);
}

double gamma_monotone(const Spectrum& spec, const GammaMonotone& gm) {
  require_order(gm.n, "gamma monotone order");
  const std::vector<double> mu = modular_moments(spec, gm.n);
  double acc = mu[gm.n - 1];
  for (int j = 1; j < gm.n && j < static_cast<int>(gm.gammas.size()); ++j) acc += gm.gammas[j] * mu[j - 1];
  if (!gm.gammas.empty()) acc += gm.gammas[0];
  return acc;
}

bool concavity_check(const GammaMonotone& gm) {
  require_order(gm.n, "gamma monotone order");
  // P(u) = u^n + sum gamma_j u^j; the second derivative of x P(-ln x) is
  // (P''(u) - P'(u)) / x.
  std::vector<double> c(gm.n + 1, 0.0);
  c[gm.n] = 1.0;
  for (int j = 1; j < gm.n && j < static_cast<int>(gm.gammas.size()); ++j) c[j] = gm.gammas[j];
  std::vector<double> d1(gm.n, 0.0);
  std::vector<double> d2(std::max(gm.n - 1, 1), 0.0);
  for (int j = 1; j <= gm.n; ++j) d1[j - 1] = j * c[j];
  for (int j = 2; j <= gm.n; ++j) d2[j - 2] = j * (j - 1) * c[j];
  constexpr int kPoints = 1000;
  for (int i = 0; i < kPoints; ++i) {
    const double log10x = -12.0 + 12.0 * i / (kPoints - 1);
    const double x = std::pow(10.0, log10x);
    const double u = -std::log(x);
    const double second = (horner(d2, u) - horner(d1, u)) / x;
    if (second > 1e-9) return false;
  }
  return true;
}

double ExtremalPoly::F(double y) const { return horner(fcoeffs, y); }

double ExtremalPoly::G(double y) const { return horner(gcoeffs, y); }

int extremal_root_count(int n) { return n >= 1 ? (n - 1) / 2 : 0; }

ExtremalPoly extremal_poly(int n, std::vector<double> roots) {
  check_roots(n, roots);
  std::vector<Rational> exact_roots(roots.begin(), roots.end());
  const std::vector<Rational> g = extremal_g<Rational>(n, exact_roots);
  const std::vector<Rational> f = extremal_f<Rational>(n, g);
  ExtremalPoly poly;
  poly.n = n;
  poly.roots = std::move(roots);
  for (const Rational& v : f) poly.fcoeffs.push_back(static_cast<double>(v));
  for (const Rational& v : g) poly.gcoeffs.push_back(static_cast<double>(v));
  return poly;
}

double extremal_identity_residual(int n, const std::vector<double>& roots) {
  check_roots(n, roots);
  std::vector<Rational> exact_roots(roots.begin(), roots.end());
  const std::vector<Rational> g = extremal_g<Rational>(n, exact_roots);
  std::vector<Rational> f = extremal_f<Rational>(n, g);
  f.resize(n + 2, Rational(0));
  Rational worst(0);
  for (int j = 0; j < n; ++j) {
    const Rational r = Rational(j + 1) * f[j + 1] + Rational((j + 2) * (j + 1)) * f[j + 2] - g[j];
    const Rational mag = abs(r);
    if (mag > worst) worst = mag;
  }
  if (f[0] != 0) {
    const Rational mag = abs(f[0]);
    if (mag > worst) worst = mag;
  }
  return static_cast<double>(worst);
}

bool extremal_concavity_check(const ExtremalPoly& poly) {
  auto h = [&](double x) { return -x * poly.F(std::log(x)); };
  constexpr int kPoints = 1000;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int i = 0; i < kPoints; ++i) {
    const double sample = std::pow(10.0, -8.0 + 8.0 * i / (kPoints - 1));
    const double d = 1e-3 * sample;
    // Keep the stencil inside (0, 1]; odd-parity F is not concave past x = 1.
    const double x = std::min(sample, 1.0 - d);
    const double hp = h(x + d);
    const double h0 = h(x);
    const double hm = h(x - d);
    const double second = (hp - 2.0 * h0 + hm) / (d * d);
    const double noise = 64.0 * eps * (std::abs(hp) + 2.0 * std::abs(h0) + std::abs(hm)) / (d * d);
    if (second > 1e-9 + noise) return false;
  }
  return true;
}

double extremal_value(const Spectrum& spec, const ExtremalPoly& poly) {
  double acc = 0.0;
  for (double p : spec.probs())
    if (p > 0.0) acc += p * poly.F(std::log(p));
  return acc;
}

double normalized_extremal_value(const Spectrum& spec, const ExtremalPoly& poly) {
  return poly.n * extremal_value(spec, poly);
}

std::vector<double> delta_m(const Spectrum& rho, const Spectrum& sigma, int nmax) {
  require_order(nmax, "ladder order");
  std::vector<double> out(nmax);
  for (int n = 1; n <= nmax; ++n) {
    const ShiftParams p = ShiftParams::minimal(n);
    out[n - 1] = shifted_moment(sigma, p) - shifted_moment(rho, p);
  }
  return out;
}

namespace {

// Minimum over a >= 0 of w2 a^2 + w1 a + w0, scaled by `scale`.
InequalitySlack quadratic_min(double w2, double w1, double w0, double scale, const char* what) {
  InequalitySlack out;
  if (w2 <= kCompareTol) {
    if (std::abs(w1) <= kCompareTol) {
      out.boundary = true;
      out.slack = scale * w0;
      return out;
    }
    throw Error(ErrorKind::DegenerateDenominator,
                std::string(what) + ": leading coefficient vanishes while the linear term does not");
  }
  out.vertex = -w1 / (2.0 * w2);
  if (out.vertex < 0.0) {
    out.boundary = true;
    out.slack = scale * w0;
  } else {
    out.slack = scale * (w0 - w1 * w1 / (4.0 * w2));
  }
  return out;
}

}  // namespace

InequalitySlack inequality3_slack_from_delta(std::span<const double> dm) {
  if (dm.size() < 3) throw Error(ErrorKind::InvalidArgument, "third-order slack needs Delta M_1..3");
  return quadratic_min(dm[0], -dm[1], dm[2] / 3.0 - dm[1], 3.0, "third-order inequality");
}

InequalitySlack inequality4_slack_from_delta(std::span<const double> dm) {
  if (dm.size() < 4) throw Error(ErrorKind::InvalidArgument, "fourth-order slack needs Delta M_1..4");
  return quadratic_min(dm[1] / 2.0, -(2.0 / 3.0) * (dm[2] - 3.0 * dm[1]),
                       (dm[3] - 8.0 * dm[2] + 6.0 * dm[1]) / 4.0, 4.0, "fourth-order inequality");
}

InequalitySlack inequality3_slack(const Spectrum& rho, const Spectrum& sigma) {
  return inequality3_slack_from_delta(delta_m(rho, sigma, 3));
}

InequalitySlack inequality4_slack(const Spectrum& rho, const Spectrum& sigma) {
  return inequality4_slack_from_delta(delta_m(rho, sigma, 4));
}

double entropy_capacity_slack(const Spectrum& rho, const Spectrum& sigma) {
  const ModularStats a = modular_stats(rho, 2);
  const ModularStats b = modular_stats(sigma, 2);
  return (b.entropy() - a.entropy()) * (a.entropy() + b.entropy() + 2.0) -
         (a.capacity() - b.capacity());
}

std::vector<double> log_power_sums(const Spectrum& spec, int n) {
  std::vector<double> out(n + 1, 0.0);
  for (double p : spec.probs()) {
    if (p <= 0.0) continue;
    const double y = std::log(p);
    double pw = p;
    for (int j = 0; j <= n; ++j) {
      out[j] += pw;
      pw *= y;
    }
  }
  return out;
}

OptimizedSlack optimized_extremal_slack(const Spectrum& rho, const Spectrum& sigma, int n,
                                        const SearchConfig& cfg) {
  require_order(n, "extremal degree");
  const int k = extremal_root_count(n);
  const std::vector<double> lr = log_power_sums(rho, n);
  const std::vector<double> ls = log_power_sums(sigma, n);
  auto objective = [&](std::span<const double> a) {
    return n * dot_diff(fcoeffs_fast(n, a), lr, ls);
  };

  OptimizedSlack out;
  if (k == 0) {
    out.slack = objective({});
    return out;
  }

  const double a_max = cfg.a_max > 0.0 ? cfg.a_max : 2.0 * (entropy(rho) + entropy(sigma) + n);
  int points = std::max(cfg.grid_points, 2);
  while (std::pow(static_cast<double>(points), k) > static_cast<double>(cfg.max_grid_evaluations) &&
         points > 2) {
    --points;
    out.budget_exceeded = true;
  }
  const double spacing = a_max / (points - 1);

  std::vector<double> best(k, 0.0);
  double best_val = std::numeric_limits<double>::infinity();
  std::vector<int> idx(k, 0);
  std::vector<double> a(k, 0.0);
  while (true) {
    for (int i = 0; i < k; ++i) a[i] = idx[i] * spacing;
    const double v = objective(a);
    if (v < best_val) {
      best_val = v;
      best = a;
    }
    int pos = 0;
    while (pos < k && ++idx[pos] == points) idx[pos++] = 0;
    if (pos == k) break;
  }

  double step = spacing;
  bool converged = false;
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    bool improved = false;
    for (int i = 0; i < k; ++i) {
      for (double dir : {1.0, -1.0}) {
        std::vector<double> trial = best;
        trial[i] = std::clamp(trial[i] + dir * step, 0.0, a_max);
        const double v = objective(trial);
        if (v < best_val) {
          best_val = v;
          best = std::move(trial);
          improved = true;
          break;
        }
      }
    }
    if (!improved) {
      step *= 0.5;
      if (step < cfg.step_tol) {
        converged = true;
        break;
      }
    }
  }
  out.slack = best_val;
  out.roots = best;
  out.budget_exceeded = out.budget_exceeded || !converged;
  return out;
}

}  // namespace entmono
