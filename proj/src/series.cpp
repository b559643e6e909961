#include "leroy/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "leroy/errors.hpp"
#include "leroy/gamma.hpp"

namespace leroy {

namespace {

constexpr int kMaxTerms = 10000;
constexpr double kLogDoubleMax = 709.782712893384;

// Compensated complex accumulator; keeps the summation error near one ulp
// of the running sum even for a few hundred terms.
struct KahanSum {
  std::complex<double> sum{0.0, 0.0};
  std::complex<double> carry{0.0, 0.0};

  void add(std::complex<double> term) {
    const std::complex<double> y = term - carry;
    const std::complex<double> t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

void check_tol(double tol) {
  if (!(tol > 1e-15 && tol <= 1e-2)) {
    throw std::invalid_argument("tol must lie in (1e-15, 1e-2]");
  }
}

// sum_i gamma_i * lgamma(alpha_i * k + beta_i)
double log_denominator(const LeRoyParams& params, double k) {
  double acc = 0.0;
  for (const ParamTriple& t : params.triples()) {
    acc += t.gamma * log_gamma(t.alpha * k + t.beta);
  }
  return acc;
}

double log_beta_product(const LeRoyParams& params) {
  double acc = 0.0;
  for (const ParamTriple& t : params.triples()) {
    acc += t.gamma * log_gamma(t.beta);
  }
  return acc;
}

double safe_exp(double log_value, const char* what) {
  if (log_value > kLogDoubleMax) throw OverflowError(what);
  return std::exp(log_value);
}

}  // namespace

SeriesEvaluator::SeriesEvaluator(LeRoyParams params, Form form)
    : params_(std::move(params)),
      form_(form),
      log_beta_product_(log_beta_product(params_)) {}

// Log magnitude of the coefficient multiplying z^p at series index k.
// raw:         c_k = 1 / prod Gamma(a k + b)^g,               p = k
// normalized:  A_1 = 1, A_k = B / prod Gamma(a (k-1) + b)^g,  p = k
// derivative1: 1, then k A_k,                                 p = k - 1
// derivative2: k (k-1) A_k (k >= 2),                          p = k - 2
double SeriesEvaluator::log_coeff(int k) const {
  if (k < static_cast<int>(cache_.size())) return cache_[k];
  cache_.reserve(k + 1);
  for (int j = static_cast<int>(cache_.size()); j <= k; ++j) {
    double v = 0.0;
    switch (form_) {
      case Form::raw:
        v = -log_denominator(params_, j);
        break;
      case Form::normalized:
        v = (j <= 1) ? 0.0
                     : log_beta_product_ - log_denominator(params_, j - 1.0);
        break;
      case Form::derivative1:
        v = (j <= 1) ? 0.0
                     : std::log(double(j)) + log_beta_product_ -
                           log_denominator(params_, j - 1.0);
        break;
      case Form::derivative2:
        // Indices below the first term are placeholders, never summed.
        v = (j <= 1) ? -std::numeric_limits<double>::infinity()
                     : std::log(double(j)) + std::log(double(j - 1)) +
                           log_beta_product_ - log_denominator(params_, j - 1.0);
        break;
    }
    cache_.push_back(v);
  }
  return cache_[k];
}

SeriesValue SeriesEvaluator::operator()(std::complex<double> z,
                                        double tol) const {
  check_tol(tol);

  const double log_r = std::log(std::abs(z));
  const double arg_z = std::arg(z);

  int first_k = 0, power_shift = 0;
  switch (form_) {
    case Form::raw:         first_k = 0; power_shift = 0; break;
    case Form::normalized:  first_k = 1; power_shift = 0; break;
    case Form::derivative1: first_k = 1; power_shift = 1; break;
    case Form::derivative2: first_k = 2; power_shift = 2; break;
  }

  KahanSum sum;
  double prev_abs = 0.0;
  int consecutive = 0;

  for (int k = first_k; k < first_k + kMaxTerms; ++k) {
    const int p = k - power_shift;  // power of z in this term
    // Magnitude in log space, phase tracked separately: overflow-free even
    // when individual gamma factors would not fit in a double.
    const double log_mag = (p == 0) ? log_coeff(k) : p * log_r + log_coeff(k);
    if (log_mag > kLogDoubleMax) {
      throw OverflowError("series term overflows double range");
    }
    const double mag = std::exp(log_mag);
    const double phase = p * arg_z;
    const std::complex<double> term =
        (p == 0) ? std::complex<double>(mag, 0.0)
                 : std::complex<double>(mag * std::cos(phase), mag * std::sin(phase));
    sum.add(term);

    // Stopping rule: three consecutive terms below tol/4 * max(1, |S|)
    // whose run also decays at ratio <= 1/2, and a tail bound 2|t| that
    // already meets the requested tolerance.
    const bool small = mag <= 0.25 * tol * std::max(1.0, std::abs(sum.sum));
    const bool decaying = (k == first_k) ? (mag == 0.0) : (mag <= 0.5 * prev_abs);
    consecutive = (small && decaying) ? consecutive + 1 : 0;
    prev_abs = mag;

    if (consecutive >= 3 && 2.0 * mag <= tol) {
      return SeriesValue{sum.sum, 2.0 * mag, k - first_k + 1};
    }
  }
  throw ConvergenceError(
      "series did not meet the stopping rule within 10000 terms "
      "(pathological parameters or overflow)");
}

SeriesValue eval(const LeRoyParams& params, std::complex<double> z, double tol) {
  return SeriesEvaluator(params, SeriesEvaluator::Form::raw)(z, tol);
}

SeriesValue eval_normalized(const LeRoyParams& params, std::complex<double> z,
                            double tol) {
  return SeriesEvaluator(params, SeriesEvaluator::Form::normalized)(z, tol);
}

SeriesValue eval_derivative(const LeRoyParams& params, std::complex<double> z,
                            int order, double tol) {
  if (order != 1 && order != 2) {
    throw std::invalid_argument("eval_derivative: order must be 1 or 2");
  }
  const auto form = order == 1 ? SeriesEvaluator::Form::derivative1
                               : SeriesEvaluator::Form::derivative2;
  return SeriesEvaluator(params, form)(z, tol);
}

namespace {

double log_coefficient(const LeRoyParams& params, CoefficientKind kind, int k) {
  const double kk = k;
  const double log_b = log_beta_product(params);
  const double log_d = log_denominator(params, kk);
  switch (kind) {
    case CoefficientKind::raw:
      return -log_d;
    case CoefficientKind::normalized:
      return log_b - log_d;
    case CoefficientKind::proof_c:
      return log_gamma(kk + 1.0) + log_b - log_d;
    case CoefficientKind::proof_b:
      return std::log(kk) + log_gamma(kk + 1.0) + log_b - log_d;
    case CoefficientKind::proof_d:
      // (k+1) k Gamma(k), exactly as printed; equals (k+1) Gamma(k+1).
      return std::log(kk + 1.0) + std::log(kk) + log_gamma(kk) + log_b - log_d;
    case CoefficientKind::proof_g:
      return std::log(kk + 1.0) + log_gamma(kk + 1.0) + log_b - log_d;
    case CoefficientKind::lemma_x:
      return log_gamma(kk + 1.0) - log_d;
    case CoefficientKind::lemma_y:
      return log_b + log_gamma(kk + 2.0) - log_d;
  }
  throw std::invalid_argument("unknown CoefficientKind");
}

}  // namespace

double coefficient(const LeRoyParams& params, CoefficientKind kind, int k) {
  if (k < 1) throw std::invalid_argument("coefficient: k must be >= 1");
  return safe_exp(log_coefficient(params, kind, k),
                  "coefficient: value exceeds double range at this k");
}

double theta(const LeRoyParams& params) {
  double acc = 0.0;
  for (const ParamTriple& t : params.triples()) {
    acc += t.gamma * (log_gamma(t.beta) - log_gamma(t.alpha + t.beta));
  }
  return safe_exp(acc, "theta: value exceeds double range");
}

MonotonicityReport coefficient_monotone(const LeRoyParams& params,
                                        CoefficientKind kind, int k_max) {
  if (k_max < 2 || k_max > 10000) {
    throw std::invalid_argument("coefficient_monotone: k_max must be in [2, 10000]");
  }
  // Log-space comparison: monotonicity is scale-free and never overflows.
  double prev = log_coefficient(params, kind, 1);
  for (int k = 2; k <= k_max; ++k) {
    const double cur = log_coefficient(params, kind, k);
    if (cur > prev + 1e-13) {
      return MonotonicityReport{false, k};
    }
    prev = cur;
  }
  return MonotonicityReport{true, std::nullopt};
}

}  // namespace leroy
