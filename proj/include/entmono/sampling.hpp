#pragma once

#include <cstdint>
#include <random>

#include "entmono/spectra.hpp"

namespace entmono {

using Rng = std::mt19937_64;

// Uniform on the probability simplex (symmetric Dirichlet with unit weights).
Spectrum random_spectrum(Rng& rng, std::size_t dim);

// Convex combination of `terms` random permutation matrices.
RealMatrix random_bistochastic(Rng& rng, std::size_t dim, std::size_t terms = 4);

// Rows drawn independently from the simplex.
RealMatrix random_stochastic(Rng& rng, std::size_t dim);

}  // namespace entmono
