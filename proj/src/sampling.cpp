#include "entmono/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace entmono {

namespace {

std::vector<double> simplex_point(Rng& rng, std::size_t dim) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> v(dim);
  double sum = 0.0;
  for (double& x : v) {
    x = expo(rng);
    sum += x;
  }
  for (double& x : v) x /= sum;
  return v;
}

}  // namespace

Spectrum random_spectrum(Rng& rng, std::size_t dim) {
  return Spectrum::normalize(simplex_point(rng, dim), true);
}

RealMatrix random_bistochastic(Rng& rng, std::size_t dim, std::size_t terms) {
  const std::vector<double> weights = simplex_point(rng, std::max<std::size_t>(terms, 1));
  RealMatrix t(dim, dim);
  std::vector<std::size_t> perm(dim);
  for (double w : weights) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < dim; ++i) t(i, perm[i]) += w;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < dim; ++j) row += t(i, j);
    for (std::size_t j = 0; j < dim; ++j) t(i, j) /= row;
  }
  return t;
}

RealMatrix random_stochastic(Rng& rng, std::size_t dim) {
  RealMatrix t(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::vector<double> row = simplex_point(rng, dim);
    for (std::size_t j = 0; j < dim; ++j) t(i, j) = row[j];
  }
  return t;
}

}  // namespace entmono
