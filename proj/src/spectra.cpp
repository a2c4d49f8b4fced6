#include "entmono/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "entmono/error.hpp"
#include "json.hpp"

namespace entmono {

namespace {

constexpr double kClampFloor = -1e-14;
constexpr double kRescaleWindow = 1e-9;

std::vector<double> clamp_checked(std::span<const double> raw) {
  if (raw.empty()) throw Error(ErrorKind::NotNormalizable, "spectrum is empty");
  std::vector<double> out(raw.begin(), raw.end());
  for (double& v : out) {
    if (!std::isfinite(v)) throw Error(ErrorKind::NotNormalizable, "spectrum entry is not finite");
    if (v < kClampFloor) {
      throw Error(ErrorKind::NegativeEntry, "spectrum entry " + std::to_string(v) + " is negative");
    }
    if (v < 0.0) v = 0.0;
  }
  return out;
}

double total(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

Spectrum::Spectrum(std::vector<double> probs) : probs_(clamp_checked(probs)) {
  const double sum = total(probs_);
  if (std::abs(sum - 1.0) > kCompareTol) {
    throw Error(ErrorKind::NotNormalizable, "spectrum sums to " + std::to_string(sum));
  }
}

Spectrum Spectrum::normalize(std::span<const double> raw, bool force) {
  std::vector<double> v = clamp_checked(raw);
  const double sum = total(v);
  if (!(sum > 0.0)) throw Error(ErrorKind::NotNormalizable, "spectrum has no positive entry");
  if (!force && std::abs(sum - 1.0) > kRescaleWindow) {
    throw Error(ErrorKind::NotNormalizable,
                "spectrum sum deviates from one by " + std::to_string(sum - 1.0));
  }
  for (double& x : v) x /= sum;
  return Spectrum(std::move(v));
}

Spectrum Spectrum::uniform(std::size_t dim) {
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  return Spectrum::normalize(std::vector<double>(dim, 1.0), true);
}

Spectrum Spectrum::pure(std::size_t dim) {
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  std::vector<double> v(dim, 0.0);
  v[0] = 1.0;
  return Spectrum(std::move(v));
}

double Spectrum::min_entry() const { return *std::min_element(probs_.begin(), probs_.end()); }

bool Spectrum::full_rank() const { return min_entry() > 0.0; }

std::vector<double> Spectrum::sorted_descending() const {
  std::vector<double> v = probs_;
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

Spectrum kron(const Spectrum& a, const Spectrum& b) {
  std::vector<double> v;
  v.reserve(a.dim() * b.dim());
  for (double x : a.probs())
    for (double y : b.probs()) v.push_back(x * y);
  return Spectrum::normalize(v, true);
}

CommutingPair::CommutingPair(Spectrum r, Spectrum s) : r_(std::move(r)), s_(std::move(s)) {
  if (r_.dim() != s_.dim()) {
    throw Error(ErrorKind::DimMismatch, "paired spectra have dimensions " +
                                            std::to_string(r_.dim()) + " and " +
                                            std::to_string(s_.dim()));
  }
}

double CommutingPair::s_min() const {
  require_full_rank_reference();
  return s_.min_entry();
}

void CommutingPair::require_full_rank_reference() const {
  if (!s_.full_rank()) {
    throw Error(ErrorKind::RankDeficientReference, "reference spectrum has a zero eigenvalue");
  }
}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool majorizes(const Spectrum& a, const Spectrum& b) {
  std::vector<double> x = a.sorted_descending();
  std::vector<double> y = b.sorted_descending();
  const std::size_t n = std::max(x.size(), y.size());
  x.resize(n, 0.0);
  y.resize(n, 0.0);
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    if (sx < sy - kCompareTol) return false;
  }
  return true;
}

namespace {

double l1_profile(const CommutingPair& p, double t) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) acc += std::abs(p.r()[i] - t * p.s()[i]);
  return acc;
}

}  // namespace

bool sigma_majorizes(const CommutingPair& first, const CommutingPair& second) {
  if (first.dim() != second.dim()) {
    throw Error(ErrorKind::DimMismatch, "pairs have different dimensions");
  }
  first.require_full_rank_reference();
  second.require_full_rank_reference();
  std::vector<double> ts{0.0};
  for (const CommutingPair* p : {&first, &second})
    for (std::size_t i = 0; i < p->dim(); ++i) ts.push_back(p->r()[i] / p->s()[i]);
  for (double t : ts) {
    if (l1_profile(first, t) < l1_profile(second, t) - kCompareTol) return false;
  }
  return true;
}

void require_stochastic(const RealMatrix& t, std::size_t dim) {
  if (t.rows() != dim || t.cols() != dim) {
    throw Error(ErrorKind::NotStochastic, "stochastic matrix must be " + std::to_string(dim) +
                                              "x" + std::to_string(dim));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      if (t(i, j) < 0.0) throw Error(ErrorKind::NotStochastic, "negative matrix entry");
      row += t(i, j);
    }
    if (std::abs(row - 1.0) > kCompareTol) {
      throw Error(ErrorKind::NotStochastic, "row " + std::to_string(i) + " does not sum to one");
    }
  }
}

Spectrum apply_stochastic(const Spectrum& x, const RealMatrix& t) {
  require_stochastic(t, x.dim());
  std::vector<double> out(x.dim(), 0.0);
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) out[j] += x[i] * t(i, j);
  return Spectrum::normalize(out, true);
}

CommutingPair apply_stochastic(const CommutingPair& pair, const RealMatrix& t) {
  return CommutingPair(apply_stochastic(pair.r(), t), apply_stochastic(pair.s(), t));
}

Spectrum parse_spectrum(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    try {
      const auto j = nlohmann::json::parse(text);
      return Spectrum::normalize(j.get<std::vector<double>>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, std::string("bad spectrum JSON: ") + e.what());
    }
  }
  std::vector<double> values;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(lineno) + ": cannot parse '" + tok + "'");
      }
      values.push_back(v);
    }
  }
  return Spectrum::normalize(values);
}

Spectrum read_spectrum_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spectrum(buf.str());
}

}  // namespace entmono
