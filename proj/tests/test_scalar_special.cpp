#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "leroy/constants.hpp"
#include "leroy/errors.hpp"
#include "leroy/gamma.hpp"

using leroy::digamma;
using leroy::gamma;
using leroy::kMathConstants;
using leroy::log_gamma;
using C = std::complex<double>;

namespace {

// Independent digamma values at integers and half-integers:
// psi(n) = -delta + H_{n-1},  psi(n + 1/2) = -delta - 2 log 2 + 2 sum_{k<=n} 1/(2k-1).
double psi_integer(long n) {
  double h = 0.0;
  for (long k = n - 1; k >= 1; --k) h += 1.0 / k;  // small terms first
  return -kMathConstants.euler_mascheroni + h;
}

double psi_half_integer(long n) {
  double s = 0.0;
  for (long k = n; k >= 1; --k) s += 1.0 / (2.0 * k - 1.0);
  return -kMathConstants.euler_mascheroni - 2.0 * std::log(2.0) + 2.0 * s;
}

}  // namespace

TEST_CASE("log_gamma at classical points") {
  CHECK(std::abs(log_gamma(C(1.0, 0.0))) <= 1e-12);
  CHECK(std::abs(log_gamma(C(5.0, 0.0)).real() - std::log(24.0)) <= 1e-12);
  CHECK(std::abs(log_gamma(C(0.5, 0.0)).real() - 0.5 * std::log(leroy::kPi)) <= 1e-12);
  CHECK(log_gamma(C(5.0, 0.0)).imag() == 0.0);
}

TEST_CASE("log_gamma meets the 1e-12 contract on [0.5, 170]") {
  // Relative error of exp(log_gamma) against Gamma equals the absolute
  // log-space error for small deviations; std::lgamma is the oracle.
  double worst = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double x = 0.5 + (170.0 - 0.5) * i / 4000.0;
    worst = std::max(worst, std::abs(log_gamma(x) - std::lgamma(x)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("log_gamma rejects the left half-plane") {
  CHECK_THROWS_AS(log_gamma(C(-1.5, 0.3)), std::domain_error);
  CHECK_THROWS_AS(log_gamma(C(0.0, 1.0)), std::domain_error);
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
}

TEST_CASE("gamma at classical points") {
  CHECK(std::abs(gamma(C(4.0, 0.0)).real() - 6.0) <= 6.0 * 1e-12);
  CHECK(std::abs(gamma(C(0.5, 0.0)).real() - std::sqrt(leroy::kPi)) <= 1e-12 * 2);
  // Reflection by hand: Gamma(-1/2) = pi / (sin(-pi/2) Gamma(3/2)) = -2 sqrt(pi).
  CHECK(std::abs(gamma(C(-0.5, 0.0)).real() + 2.0 * std::sqrt(leroy::kPi)) <= 1e-11);
}

TEST_CASE("gamma poles and overflow") {
  CHECK_THROWS_AS(gamma(C(0.0, 0.0)), leroy::PoleError);
  CHECK_THROWS_AS(gamma(C(-1.0, 0.0)), leroy::PoleError);
  CHECK_THROWS_AS(gamma(C(-7.0, 0.0)), leroy::PoleError);
  CHECK_THROWS_AS(gamma(C(172.0, 0.0)), leroy::OverflowError);
  CHECK_NOTHROW(gamma(C(171.0, 0.0)));
}

TEST_CASE("gamma recurrence: Gamma(z+1) = z Gamma(z) on random complex z") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> re(0.1, 50.0);
  std::uniform_real_distribution<double> im(-20.0, 20.0);
  for (int i = 0; i < 1000; ++i) {
    const C z(re(rng), im(rng));
    const C lhs = gamma(z + 1.0);
    const C rhs = z * gamma(z);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(lhs));
  }
}

TEST_CASE("gamma reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  int done = 0;
  while (done < 500) {
    const double x = dist(rng);
    if (std::abs(x - std::round(x)) < 1e-3) continue;  // stay off the poles
    ++done;
    const C lhs = gamma(C(x, 0.0)) * gamma(C(1.0 - x, 0.0));
    const C rhs = leroy::kPi / std::sin(leroy::kPi * C(x, 0.0));
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(rhs));
  }
}

TEST_CASE("digamma at classical points") {
  CHECK(digamma(1.0) == doctest::Approx(-kMathConstants.euler_mascheroni).epsilon(1e-12));
  CHECK(digamma(2.0) == doctest::Approx(1.0 - kMathConstants.euler_mascheroni).epsilon(1e-12));
  const double d10 = digamma(10.0);
  CHECK(d10 > std::log(10.0) - kMathConstants.euler_mascheroni);
  CHECK(d10 < std::log(10.0));
}

TEST_CASE("digamma absolute error <= 1e-12 against closed forms on [1, 1e6]") {
  for (long n : {1L, 2L, 3L, 5L, 7L, 10L, 25L, 50L, 100L, 1000L, 100000L, 1000000L}) {
    CHECK(std::abs(digamma(double(n)) - psi_integer(n)) <= 1e-12);
  }
  for (long n : {0L, 1L, 2L, 5L, 10L, 100L, 1000L}) {
    CHECK(std::abs(digamma(n + 0.5) - psi_half_integer(n)) <= 1e-12);
  }
}

TEST_CASE("digamma recurrence psi(s+1) - psi(s) = 1/s") {
  std::vector<double> points = {0.1, 0.5};
  for (int s = 1; s <= 100; ++s) points.push_back(s);
  for (double s : points) {
    CHECK(std::abs(digamma(s + 1.0) - digamma(s) - 1.0 / s) <= 1e-11);
  }
}

TEST_CASE("digamma inequality log(s) - delta < psi(s) < log(s) strictly") {
  const double delta = kMathConstants.euler_mascheroni;
  for (int i = 0; i < 1000; ++i) {
    const double s = std::pow(10.0, 4.0 * i / 999.0);
    const double ps = digamma(s);
    CHECK(ps > std::log(s) - delta);
    CHECK(ps < std::log(s));
  }
}

TEST_CASE("digamma domain") {
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
  CHECK_THROWS_AS(digamma(-3.2), std::domain_error);
}

TEST_CASE("math constants") {
  CHECK(kMathConstants.euler_mascheroni > 0.5772156);
  CHECK(kMathConstants.euler_mascheroni < 0.5772157);
  CHECK(std::abs(kMathConstants.euler_number - std::exp(1.0)) <= 1e-15 * std::exp(1.0));
}
