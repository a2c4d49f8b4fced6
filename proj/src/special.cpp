#include "entmono/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "entmono/error.hpp"

namespace entmono {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos{
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

void require_not_pole(double x) {
  if (x <= 0.0 && x == std::floor(x)) {
    throw Error(ErrorKind::DomainError, "argument is a pole of the gamma function");
  }
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  using C = std::complex<double>;
  if (z.real() < 0.5) {
    require_not_pole(z.imag() == 0.0 ? z.real() : 1.0);
    // ln Gamma(z) = ln pi - ln sin(pi z) - ln Gamma(1 - z)
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma(1.0 - z);
  }
  const C w = z - 1.0;
  C sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (w + static_cast<double>(i));
  const C t = w + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (w + 0.5) * std::log(t) - t + std::log(sum);
}

double digamma(double x) {
  require_not_pole(x);
  if (x < 0.0) return digamma(1.0 - x) - kPi / std::tan(kPi * x);
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double r = 1.0 / (x * x);
  const double series =
      r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12))))));
  return acc + std::log(x) - 0.5 / x - series;
}

double trigamma(double x) {
  require_not_pole(x);
  if (x < 0.0) {
    const double s = std::sin(kPi * x);
    return -trigamma(1.0 - x) + kPi * kPi / (s * s);
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double r = 1.0 / (x * x);
  const double series =
      1.0 / 6 - r * (1.0 / 30 - r * (1.0 / 42 - r * (1.0 / 30 - r * (5.0 / 66 - r * (691.0 / 2730 - r * 7.0 / 6)))));
  return acc + 1.0 / x + 0.5 * r + series * r / x;
}

}  // namespace entmono
