#pragma once

#include <functional>

namespace entmono {

// Adaptive Simpson to absolute tolerance `tol`; throws
// QuadratureNoConvergence when the recursion depth is exhausted.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 50);

// Bisection on a bracketing interval to |b - a| < tol; throws NoSignChange
// when f(a) and f(b) share a sign.
double bisect(const std::function<double(double)>& f, double a, double b, double tol = 1e-6);

}  // namespace entmono
