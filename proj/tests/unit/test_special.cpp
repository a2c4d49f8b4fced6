#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <cmath>
#include <complex>

#include "doctest.h"
#include "entmono/error.hpp"
#include "entmono/numerics.hpp"
#include "entmono/special.hpp"

using namespace entmono;

TEST_CASE("log_gamma on the real axis matches lgamma") {
  for (double x = 0.05; x < 60.0; x *= 1.37) {
    CHECK(log_gamma({x, 0.0}).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  }
  for (double x : {-0.5, -1.5, -2.3, -7.7}) {
    CHECK(log_gamma({x, 0.0}).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-12));
  }
}

TEST_CASE("log_gamma satisfies the recurrence off the axis") {
  for (double re : {-3.3, 0.2, 1.7, 9.0})
    for (double im : {-4.0, 0.5, 2.0}) {
      const std::complex<double> z(re, im);
      const std::complex<double> lhs = std::exp(log_gamma(z + 1.0));
      const std::complex<double> rhs = z * std::exp(log_gamma(z));
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
    }
  // |Gamma(1/2 + i y)|^2 = pi / cosh(pi y)
  for (double y : {0.3, 1.0, 3.0}) {
    const double mod2 = std::exp(2.0 * log_gamma({0.5, y}).real());
    CHECK(mod2 == doctest::Approx(M_PI / std::cosh(M_PI * y)).epsilon(1e-12));
  }
}

TEST_CASE("digamma and trigamma against Boost.Math") {
  for (double x = 0.01; x < 200.0; x *= 1.21) {
    CHECK(digamma(x) == doctest::Approx(boost::math::digamma(x)).epsilon(1e-13));
    CHECK(trigamma(x) == doctest::Approx(boost::math::trigamma(x)).epsilon(1e-12));
  }
  for (double x : {-0.5, -1.25, -3.7}) {
    CHECK(digamma(x) == doctest::Approx(boost::math::digamma(x)).epsilon(1e-11));
    CHECK(trigamma(x) == doctest::Approx(boost::math::trigamma(x)).epsilon(1e-11));
  }
  CHECK(digamma(1.0) == doctest::Approx(-0.5772156649015329).epsilon(1e-15));
  CHECK(trigamma(1.0) == doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-15));
}

TEST_CASE("special functions reject poles") {
  CHECK_THROWS_AS(digamma(0.0), Error);
  CHECK_THROWS_AS(digamma(-2.0), Error);
  CHECK_THROWS_AS(trigamma(-1.0), Error);
  CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), Error);
}

TEST_CASE("adaptive Simpson") {
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12) ==
        doctest::Approx(2.0).epsilon(1e-11));
  CHECK(adaptive_simpson([](double x) { return std::exp(-x) * std::cos(5.0 * x); }, 0.0, 10.0, 1e-12) ==
        doctest::Approx((1.0 - std::exp(-10.0) * (std::cos(50.0) - 5.0 * std::sin(50.0))) / 26.0).epsilon(1e-10));
  CHECK_THROWS_AS(adaptive_simpson([](double x) { return x < 1.0 / M_PI ? 0.0 : 1.0; }, 0.0, 1.0, 1e-14, 8), Error);
}

TEST_CASE("bisection") {
  CHECK(bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-12) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-11));
  try {
    bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0);
    FAIL("expected NoSignChange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSignChange);
  }
}
