#include "entmono/fermichain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "entmono/error.hpp"

namespace entmono {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kPureMode = 1e-12;

void validate(const ChainSpec& spec) {
  if (spec.N < 2) throw Error(ErrorKind::InvalidArgument, "chain needs at least two sites");
  if (spec.ell < 1 || spec.ell >= spec.N || spec.ell > kMaxBlock) {
    throw Error(ErrorKind::BlockTooLarge, "block length " + std::to_string(spec.ell) +
                                              " must satisfy 1 <= ell < N and ell <= " +
                                              std::to_string(kMaxBlock));
  }
  std::set<int> seen;
  for (int q : spec.occupation) {
    if (q < 0 || q >= spec.N) throw Error(ErrorKind::InvalidArgument, "momentum index out of range");
    if (!seen.insert(q).second) throw Error(ErrorKind::InvalidArgument, "momentum index repeated");
  }
}

ComplexMatrix xx_correlation(const ChainSpec& spec) {
  const int l = spec.ell;
  // Translation invariance: C_jk depends on k - j only.
  std::vector<cd> row(2 * l - 1);
  for (int d = -(l - 1); d <= l - 1; ++d) {
    cd acc = 0.0;
    for (int q : spec.occupation) acc += std::polar(1.0, 2.0 * kPi * q * d / spec.N);
    row[d + l - 1] = acc / static_cast<double>(spec.N);
  }
  ComplexMatrix c(l);
  for (int j = 0; j < l; ++j)
    for (int k = 0; k < l; ++k) c(j, k) = row[k - j + l - 1];
  return c;
}

ComplexMatrix ising_correlation(const ChainSpec& spec) {
  const int n = spec.N;
  const int l = spec.ell;
  std::vector<double> occ(n, 0.0);
  for (int q : spec.occupation) occ[q] = 1.0;
  std::vector<double> k(n);
  for (int q = 0; q < n; ++q) {
    double v = 2.0 * kPi * (q + 0.5) / n;
    if (v > kPi) v -= 2.0 * kPi;
    k[q] = v;
  }
  // Bogoliubov angle of the critical chain; -k_q is k_{N-1-q}.
  std::vector<double> hop(n);
  std::vector<cd> pair(n);
  for (int q = 0; q < n; ++q) {
    const double theta = (k[q] > 0 ? 1.0 : -1.0) * (kPi / 4.0 - std::abs(k[q]) / 4.0);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double nk = occ[q];
    const double nmk = occ[n - 1 - q];
    hop[q] = c * c * nk + s * s * (1.0 - nmk);
    pair[q] = cd(0.0, -s * c * (1.0 - nk - nmk));
  }
  std::vector<cd> a_row(2 * l - 1);
  std::vector<cd> f_row(2 * l - 1);
  for (int d = -(l - 1); d <= l - 1; ++d) {
    cd a = 0.0;
    cd f = 0.0;
    for (int q = 0; q < n; ++q) {
      const cd phase = std::polar(1.0, k[q] * d);
      a += phase * hop[q];
      f += std::conj(phase) * pair[q];
    }
    a_row[d + l - 1] = a / static_cast<double>(n);
    f_row[d + l - 1] = f / static_cast<double>(n);
  }
  ComplexMatrix g(2 * l);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      const cd a = a_row[j - i + l - 1];   // <c_i^dag c_j>
      const cd f = f_row[j - i + l - 1];   // <c_i c_j>
      const cd at = a_row[i - j + l - 1];  // A^T
      const cd fji = f_row[i - j + l - 1];
      g(i, j) = a;
      g(l + i, j) = f;
      g(i, l + j) = std::conj(fji);
      g(l + i, l + j) = (i == j ? 1.0 : 0.0) - at;
    }
  }
  return g;
}

double off_diagonal_norm2(const ComplexMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j) acc += std::norm(a(i, j));
  return acc;
}

}  // namespace

ChainModel parse_chain_model(std::string_view name) {
  if (name == "xx" || name == "XX") return ChainModel::XX;
  if (name == "ising" || name == "Ising") return ChainModel::IsingCritical;
  throw Error(ErrorKind::InvalidArgument, "unknown chain model '" + std::string(name) + "'");
}

std::string to_string(ChainModel m) { return m == ChainModel::XX ? "xx" : "ising"; }

double ComplexMatrix::hermiticity_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

ComplexMatrix correlation_matrix(const ChainSpec& spec) {
  validate(spec);
  return spec.model == ChainModel::XX ? xx_correlation(spec) : ising_correlation(spec);
}

std::vector<double> hermitian_eigenvalues(ComplexMatrix a, int max_sweeps) {
  const std::size_t n = a.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) total += std::norm(a(i, j));
  const double target = 1e-24 * total;  // squared form of the 1e-12 relative criterion

  bool converged = off_diagonal_norm2(a) <= target;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        const cd phase = a(p, q) / r;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Rotate the real symmetric block [[app, r], [r, aqq]] obtained after
        // absorbing the phase into column q.
        const double zeta = (aqq - app) / (2.0 * r);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cd sp = s * std::conj(phase);  // s e^{-i phi}
        for (std::size_t k = 0; k < n; ++k) {
          const cd akp = a(k, p);
          const cd akq = a(k, q);
          a(k, p) = c * akp - sp * akq;
          a(k, q) = s * akp + c * std::conj(phase) * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cd apk = a(p, k);
          const cd aqk = a(q, k);
          a(p, k) = c * apk - std::conj(sp) * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
    converged = off_diagonal_norm2(a) <= target;
  }
  if (!converged) {
    throw Error(ErrorKind::NoConvergence, "Jacobi eigensolver did not converge within " +
                                              std::to_string(max_sweeps) + " sweeps");
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

BlockOccupations block_occupations(const ComplexMatrix& corr) {
  BlockOccupations out;
  out.nus = hermitian_eigenvalues(corr);
  for (double& v : out.nus) {
    if (v < -1e-9 || v > 1.0 + 1e-9) {
      throw Error(ErrorKind::DomainError, "correlation eigenvalue " + std::to_string(v) + " outside [0, 1]");
    }
    v = std::clamp(v, 0.0, 1.0);
  }
  return out;
}

BlockOccupations block_occupations(const ChainSpec& spec) {
  BlockOccupations occ = block_occupations(correlation_matrix(spec));
  if (spec.model == ChainModel::IsingCritical) occ.nus.resize(spec.ell);
  return occ;
}

FreeFermionStats ff_stats(const BlockOccupations& occ, int nmax) {
  if (nmax < 1 || nmax > 8) throw Error(ErrorKind::InvalidArgument, "order must lie in 1..8");
  const int order = std::max(nmax, 2);
  std::vector<double> cumulants(order, 0.0);
  for (double nu : occ.nus) {
    if (nu < kPureMode || nu > 1.0 - kPureMode) continue;
    std::vector<double> mu(order, 0.0);
    const double u0 = -std::log(nu);
    const double u1 = -std::log1p(-nu);
    double p0 = nu;
    double p1 = 1.0 - nu;
    for (int k = 0; k < order; ++k) {
      p0 *= u0;
      p1 *= u1;
      mu[k] = p0 + p1;
    }
    const std::vector<double> c = cumulants_from_moments(mu);
    for (int k = 0; k < order; ++k) cumulants[k] += c[k];
  }
  FreeFermionStats out;
  out.stats.cumulants = cumulants;
  out.stats.moments = moments_from_cumulants(cumulants);
  for (int n = 1; n <= nmax; ++n) {
    out.shifted.push_back(shifted_moment_from_moments(out.stats.moments, ShiftParams::minimal(n)));
  }
  return out;
}

double ff_renyi(const BlockOccupations& occ, double alpha) {
  if (!(alpha > 0.0) || std::abs(alpha - 1.0) < 1e-12 || !std::isfinite(alpha)) {
    throw Error(ErrorKind::AlphaOutOfRange, "Renyi order must be positive and different from 1");
  }
  double acc = 0.0;
  for (double nu : occ.nus) {
    if (nu < kPureMode || nu > 1.0 - kPureMode) continue;
    acc += std::log(std::pow(nu, alpha) + std::pow(1.0 - nu, alpha));
  }
  return acc / (1.0 - alpha);
}

PresetState parse_preset_state(std::string_view name) {
  if (name == "gs") return PresetState::Ground;
  if (name == "current") return PresetState::Current;
  if (name == "psi") return PresetState::Psi;
  throw Error(ErrorKind::InvalidArgument, "unknown state '" + std::string(name) + "'");
}

std::string to_string(PresetState s) {
  switch (s) {
    case PresetState::Ground: return "gs";
    case PresetState::Current: return "current";
    case PresetState::Psi: return "psi";
  }
  return "unknown";
}

std::vector<int> preset_state(ChainModel model, int N, PresetState which) {
  if (N < 2) throw Error(ErrorKind::InvalidArgument, "chain needs at least two sites");
  if (model == ChainModel::IsingCritical) {
    if (which == PresetState::Ground) return {};
    if (which == PresetState::Psi) return {0};
    throw Error(ErrorKind::UnsupportedCombination, "the Ising chain has no current preset");
  }
  if (which == PresetState::Psi) {
    throw Error(ErrorKind::UnsupportedCombination, "the XX chain has no psi preset");
  }
  if (N % 2 != 0) throw Error(ErrorKind::InvalidArgument, "half filling needs an even number of sites");
  const int filled = N / 2;
  // Fermi sea centred on zero momentum: q = lo, ..., lo + filled - 1 (mod N).
  const int lo = -(filled / 2);
  std::vector<int> occ;
  for (int i = 0; i < filled; ++i) occ.push_back(((lo + i) % N + N) % N);
  if (which == PresetState::Current) {
    // Move the highest filled momentum to the lowest empty one above it.
    const int top = lo + filled - 1;
    occ.back() = ((top + 1) % N + N) % N;
  }
  std::sort(occ.begin(), occ.end());
  return occ;
}

}  // namespace entmono
