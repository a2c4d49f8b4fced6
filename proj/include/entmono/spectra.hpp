#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace entmono {

inline constexpr double kCompareTol = 1e-12;

// Eigenvalues of a density matrix. Storage order is the caller's; comparison
// routines sort internally so index pairing in CommutingPair survives.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> probs);

  // Rescales to unit sum. Without `force` the raw sum must be within 1e-9.
  static Spectrum normalize(std::span<const double> raw, bool force = false);
  static Spectrum uniform(std::size_t dim);
  static Spectrum pure(std::size_t dim);

  std::span<const double> probs() const noexcept { return probs_; }
  const std::vector<double>& vec() const noexcept { return probs_; }
  std::size_t dim() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  double min_entry() const;
  bool full_rank() const;
  std::vector<double> sorted_descending() const;

 private:
  std::vector<double> probs_;
};

Spectrum kron(const Spectrum& a, const Spectrum& b);

class CommutingPair {
 public:
  CommutingPair(Spectrum r, Spectrum s);

  const Spectrum& r() const noexcept { return r_; }
  const Spectrum& s() const noexcept { return s_; }
  std::size_t dim() const noexcept { return r_.dim(); }

  // Throws RankDeficientReference when s has a zero entry.
  double s_min() const;
  void require_full_rank_reference() const;

 private:
  Spectrum r_;
  Spectrum s_;
};

class RealMatrix {
 public:
  RealMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

// Descending partial sums of a dominate those of b. The shorter vector is
// zero-padded.
bool majorizes(const Spectrum& a, const Spectrum& b);

// Compares t -> sum_i |r_i - t s_i| of both pairs at every breakpoint. Exact
// when both pairs share the reference; for distinct references it is only a
// necessary condition.
bool sigma_majorizes(const CommutingPair& first, const CommutingPair& second);

CommutingPair apply_stochastic(const CommutingPair& pair, const RealMatrix& t);
Spectrum apply_stochastic(const Spectrum& x, const RealMatrix& t);
void require_stochastic(const RealMatrix& t, std::size_t dim);

// One number per line with '#' comments, or a JSON array.
Spectrum parse_spectrum(std::string_view text);
Spectrum read_spectrum_file(const std::filesystem::path& path);

}  // namespace entmono
