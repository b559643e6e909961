#ifndef LEROY_SERIES_HPP
#define LEROY_SERIES_HPP

#include <complex>
#include <optional>
#include <vector>

#include "leroy/params.hpp"

namespace leroy {

/// A partial-sum value with an honest truncation-error estimate.
struct SeriesValue {
  std::complex<double> value;
  double tail_bound;  // absolute; < requested tol on successful return
  int terms_used;
};

/// Coefficient families used by the criteria and the proofs they mirror.
///   raw        1 / prod Gamma(a_i k + b_i)^{g_i}
///   normalized A_{k+1} of the normalized series
///   proof_c    Gamma(k+1) * prod Gamma(b_i)^{g_i} / prod Gamma(a_i k + b_i)^{g_i}
///   proof_b    k * proof_c
///   proof_d    (k+1) k Gamma(k) * prod Gamma(b_i)^{g_i} / prod Gamma(a_i k + b_i)^{g_i}
///   proof_g    (k+1) Gamma(k+1) * prod Gamma(b_i)^{g_i} / prod Gamma(a_i k + b_i)^{g_i}
///   lemma_x    Gamma(k+1) / prod Gamma(a_i k + b_i)^{g_i}
///   lemma_y    prod Gamma(b_i)^{g_i} * Gamma(k+2) / prod Gamma(a_i k + b_i)^{g_i}
enum class CoefficientKind {
  raw,
  normalized,
  proof_b,
  proof_c,
  proof_d,
  proof_g,
  lemma_x,
  lemma_y,
};

struct MonotonicityReport {
  bool is_nonincreasing;
  std::optional<int> first_violation;  // smallest k with c_k > c_{k-1}
};

/// F(z) = sum_{k>=0} z^k / prod_i Gamma(alpha_i k + beta_i)^{gamma_i}.
/// Absolute error <= tail_bound <= tol. tol must lie in (1e-15, 1e-2].
SeriesValue eval(const LeRoyParams& params, std::complex<double> z, double tol);

/// Normalized form F(z) = z + sum_{k>=2} A_k z^k with
/// A_k = prod Gamma(beta_i)^{gamma_i} / prod Gamma(alpha_i (k-1) + beta_i)^{gamma_i};
/// class-A member: F(0) = 0, F'(0) = 1.
SeriesValue eval_normalized(const LeRoyParams& params, std::complex<double> z,
                            double tol);

/// Term-wise derivative of the normalized series, order 1 or 2.
SeriesValue eval_derivative(const LeRoyParams& params, std::complex<double> z,
                            int order, double tol);

/// Named coefficient family value at index k >= 1. Throws OverflowError
/// when the value leaves double range.
double coefficient(const LeRoyParams& params, CoefficientKind kind, int k);

/// theta = prod_i [Gamma(beta_i) / Gamma(alpha_i + beta_i)]^{gamma_i},
/// the growth-inequality constant.
double theta(const LeRoyParams& params);

/// Scans the family over k = 1..k_max (in log space, so no overflow) and
/// reports the first index that breaks non-increase. Stand-in for the
/// derivative-test argument on f(s) = Gamma(s+1)/prod Gamma(a_i s+b_i)^{g_i}.
MonotonicityReport coefficient_monotone(const LeRoyParams& params,
                                        CoefficientKind kind, int k_max);

/// Reusable summation engine: caches the log-coefficients of one parameter
/// set so that evaluating the same series at many points (disk grids) does
/// not recompute gamma values per point. Not safe to share one instance
/// across threads; construct per thread instead.
class SeriesEvaluator {
 public:
  enum class Form { raw, normalized, derivative1, derivative2 };

  SeriesEvaluator(LeRoyParams params, Form form);

  SeriesValue operator()(std::complex<double> z, double tol) const;

  const LeRoyParams& params() const { return params_; }

 private:
  double log_coeff(int k) const;

  LeRoyParams params_;
  Form form_;
  double log_beta_product_;  // sum gamma_i * lgamma(beta_i)
  mutable std::vector<double> cache_;
};

}  // namespace leroy

#endif  // LEROY_SERIES_HPP
