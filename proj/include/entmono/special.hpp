#pragma once

#include <complex>

namespace entmono {

// Principal-branch-continuous ln Gamma(z) for Re z >= 1/2 (reflection below),
// 15-term Lanczos approximation with g = 607/128.
std::complex<double> log_gamma(std::complex<double> z);

double digamma(double x);
double trigamma(double x);

}  // namespace entmono
