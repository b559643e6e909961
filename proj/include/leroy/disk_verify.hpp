#ifndef LEROY_DISK_VERIFY_HPP
#define LEROY_DISK_VERIFY_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "leroy/criteria.hpp"
#include "leroy/params.hpp"

namespace leroy {

/// Discretization of the open unit disk: concentric circles at `radii`
/// (strictly increasing, max <= 0.999) with `angles_per_circle` equally
/// spaced angles (>= 64). include_radial_rays additionally inserts the
/// midpoint circle between each consecutive radius pair, which sharpens
/// witness localization along rays.
struct GridSpec {
  std::vector<double> radii;
  int angles_per_circle = 720;
  bool include_radial_rays = false;

  static GridSpec default_grid();
};

/// Outcome of sampling one geometric property over a disk grid.
/// extremal_value is the grid minimum for Re-positivity properties and the
/// grid maximum for modulus-bound properties; a failing report always
/// carries a witness point that reproduces the violation on re-evaluation.
struct VerificationReport {
  std::string property;
  double radius_limit = 0.0;
  GridSpec grid;
  double extremal_value = 0.0;
  std::optional<std::complex<double>> witness;
  bool pass = false;
  std::string notes;
};

/// sup |F(z) - 1| < 1 - 1/e over the sampled disk, for the un-normalized F
/// with F(0) = 1. Throws NormalizationError unless prod Gamma(beta_i)^
/// {gamma_i} is within 1e-9 of 1.
VerificationReport verify_bound(const LeRoyParams& params, const GridSpec& grid);

/// F subordinate to e^z via the Schwarz function w = Log F: requires
/// F(0) = 1 and sup |w| < 1. Principal branch, guarded by min Re F > 0 on
/// the grid; if the guard fails the logarithm is path-continued radially
/// (step 0.01 in r, unwinding 2 pi jumps) and the report says so.
VerificationReport verify_exp_subordination(const LeRoyParams& params,
                                            const GridSpec& grid);

/// min Re(z F'(z) / F(z)) > order over |z| <= radius_limit for the
/// normalized F (grid radii are rescaled so the largest equals
/// radius_limit). A zero of F at a grid point is reported as a failure
/// with that witness.
VerificationReport verify_starlike(const LeRoyParams& params,
                                   double radius_limit, double order,
                                   const GridSpec& grid);

/// min Re(1 + z F''(z) / F'(z)) > order, analogous guards on F' zeros.
VerificationReport verify_convex(const LeRoyParams& params, double radius_limit,
                                 double order, const GridSpec& grid);

/// Exponential starlikeness: q(z) = z F'/F lies in the image of e^z, i.e.
/// q(0) = 1 and sup |Log q| < 1 (Schwarz criterion, same branch policy as
/// verify_exp_subordination).
VerificationReport verify_exp_starlike(const LeRoyParams& params,
                                       const GridSpec& grid);

/// Exponential convexity: q(z) = 1 + z F''/F' under the same criterion.
VerificationReport verify_exp_convex(const LeRoyParams& params,
                                     const GridSpec& grid);

/// Close-to-convexity with respect to -log(1-z): min Re((1-z) F'(z)) > 0.
VerificationReport verify_close_to_convex(const LeRoyParams& params,
                                          const GridSpec& grid);

/// F(x) <= x + x theta (e^x - 1) on a uniform grid of x in (0, x_max].
/// When the hypotheses min(alpha_i, gamma_i) >= 1 and alpha_j + beta_j >= 2
/// for some j do not hold, the check still runs and the notes flag the
/// result as informational.
VerificationReport verify_growth_inequality(const LeRoyParams& params,
                                            double x_max, int points);

/// One certificate bound to the disk verification of its conclusion.
/// agree is the implication check: a sufficient condition is contradicted
/// only when the hypothesis holds and the conclusion fails.
struct AgreementRecord {
  Certificate certificate;
  VerificationReport report;
  bool agree;
};

/// Runs the verifier matching certificate.theorem_id (subordination for
/// thm-3-*, the exponential-class Schwarz checks for thm-4-*, starlike /
/// convex at radius 0.999 or 0.499 for thm-5-*, close-to-convex for
/// ozaki). Verification runs whether or not the certificate is satisfied.
AgreementRecord cross_validate(const Certificate& certificate,
                               const GridSpec& grid);

/// Raw samples for heat-map dumps: value of the property integrand at
/// every grid point, in deterministic (radius, angle) order.
struct GridSample {
  double radius;
  double angle;
  double value;
};
std::vector<GridSample> sample_grid(const LeRoyParams& params,
                                    const std::string& property,
                                    double radius_limit, double order,
                                    const GridSpec& grid);

}  // namespace leroy

#endif  // LEROY_DISK_VERIFY_HPP
