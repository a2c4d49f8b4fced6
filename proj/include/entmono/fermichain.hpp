#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "entmono/monotones.hpp"

namespace entmono {

enum class ChainModel { XX, IsingCritical };

ChainModel parse_chain_model(std::string_view name);
std::string to_string(ChainModel m);

// Periodic chain of N sites with filled single-particle modes. For XX the
// occupation lists momenta 2 pi q / N; for the critical Ising chain it lists
// Bogoliubov quasiparticles at 2 pi (q + 1/2) / N on top of the vacuum.
struct ChainSpec {
  ChainModel model = ChainModel::XX;
  int N = 0;
  std::vector<int> occupation;
  int ell = 1;
};

inline constexpr int kMaxBlock = 2048;

class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  std::complex<double>& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  double hermiticity_residual() const;

 private:
  std::size_t n_;
  std::vector<std::complex<double>> data_;
};

// XX: the ell x ell block of <c_j^dag c_k>. Ising: the 2 ell x 2 ell
// Bogoliubov-de Gennes block [[A, F^dag], [F, 1 - A^T]].
ComplexMatrix correlation_matrix(const ChainSpec& spec);

// Cyclic Jacobi; eigenvalues in descending order. Throws NoConvergence when
// the off-diagonal norm is not below 1e-12 of the total after max_sweeps.
std::vector<double> hermitian_eigenvalues(ComplexMatrix a, int max_sweeps = 40);

struct BlockOccupations {
  std::vector<double> nus;  // descending, clamped to [0, 1]
};

// Eigenvalues of a single-particle correlation matrix.
BlockOccupations block_occupations(const ComplexMatrix& corr);
// Builds the correlation matrix of `spec`; for Ising keeps the upper half of
// the paired BdG spectrum.
BlockOccupations block_occupations(const ChainSpec& spec);

struct FreeFermionStats {
  ModularStats stats;
  std::vector<double> shifted;  // M^(n)(rho_A; n - 1), n = 1..nmax

  double shifted_moment(int n) const { return shifted.at(n - 1); }
};

// Per-mode cumulants summed over the tensor factorization.
FreeFermionStats ff_stats(const BlockOccupations& occ, int nmax);
double ff_renyi(const BlockOccupations& occ, double alpha);

enum class PresetState { Ground, Current, Psi };

PresetState parse_preset_state(std::string_view name);
std::string to_string(PresetState s);

std::vector<int> preset_state(ChainModel model, int N, PresetState which);

}  // namespace entmono
