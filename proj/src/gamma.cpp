#include "leroy/gamma.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "leroy/constants.hpp"
#include "leroy/errors.hpp"

namespace leroy {

namespace {

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
// Gamma(z) = sqrt(2 pi) * t^(z-1/2) * exp(-t) * A(z-1), t = z - 1 + g + 1/2.
// Measured log-space error stays below 4e-13 for real arguments in
// [0.02, 170], comfortably inside the 1e-12 contract.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;

// exp() overflows past this; used to turn silent infinities into errors.
constexpr double kLogDoubleMax = 709.782712893384;

template <typename T>
T lanczos_sum(const T& zm1) {
  T acc = T(kLanczosCoeff[0]);
  for (int i = 1; i < 15; ++i) acc += kLanczosCoeff[i] / (zm1 + T(i));
  return acc;
}

bool is_nonpositive_integer(std::complex<double> z) {
  if (z.imag() != 0.0) return false;
  double r = z.real();
  return r <= 0.0 && r == std::floor(r);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires Re(z) > 0");
  const double zm1 = x - 1.0;
  const double t = zm1 + kLanczosG + 0.5;
  return kHalfLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(zm1));
}

std::complex<double> log_gamma(std::complex<double> z) {
  if (!(z.real() > 0.0)) throw std::domain_error("log_gamma: requires Re(z) > 0");
  if (z.imag() == 0.0) return {log_gamma(z.real()), 0.0};
  const std::complex<double> zm1 = z - 1.0;
  const std::complex<double> t = zm1 + (kLanczosG + 0.5);
  return kHalfLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(zm1));
}

std::complex<double> gamma(std::complex<double> z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("gamma: pole at non-positive integer " + std::to_string(z.real()));
  }
  if (z.real() <= 0.0) {
    // Reflection: Gamma(z) = pi / (sin(pi z) * Gamma(1 - z)).
    const std::complex<double> s = std::sin(kPi * z);
    const std::complex<double> g1mz = gamma(1.0 - z);
    const std::complex<double> result = kPi / (s * g1mz);
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
      throw OverflowError("gamma: reflection overflow near pole");
    }
    return result;
  }
  const std::complex<double> lg = log_gamma(z);
  if (lg.real() > kLogDoubleMax) {
    throw OverflowError("gamma: |Gamma(z)| exceeds double range; work in log space");
  }
  return std::exp(lg);
}

double digamma(double s) {
  if (!(s > 0.0)) throw std::domain_error("digamma: requires s > 0");
  // psi(s) = psi(s+1) - 1/s, repeated until the asymptotic region.
  double shift = 0.0;
  while (s < 10.0) {
    shift -= 1.0 / s;
    s += 1.0;
  }
  // psi(s) ~ log s - 1/(2s) - sum_{n>=1} B_{2n} / (2n s^{2n}).
  // With s >= 10 the truncation below is under 1e-15 absolute.
  const double inv = 1.0 / s;
  const double inv2 = inv * inv;
  const double tail =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 -
                              inv2 * (1.0 / 240 -
                                      inv2 * (1.0 / 132 -
                                              inv2 * (691.0 / 32760 -
                                                      inv2 * (1.0 / 12)))))));
  return shift + std::log(s) - 0.5 * inv - tail;
}

}  // namespace leroy
