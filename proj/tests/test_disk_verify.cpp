#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "leroy/constants.hpp"
#include "leroy/criteria.hpp"
#include "leroy/disk_verify.hpp"
#include "leroy/errors.hpp"
#include "leroy/json_io.hpp"

using namespace leroy;
using C = std::complex<double>;

namespace {
const double kBound = 1.0 - 1.0 / kMathConstants.euler_number;
}

TEST_CASE("verify_bound (3,1,1): small image, passes") {
  const VerificationReport r =
      verify_bound(LeRoyParams(3, 1, 1), GridSpec::default_grid());
  CHECK(r.pass);
  CHECK(!r.witness.has_value());
  // Positive coefficients put the max on the positive real axis at the rim:
  // sum 0.999^k / Gamma(3k+1) - 1 = 0.16789 by partial sums.
  CHECK(r.extremal_value == doctest::Approx(0.167888862).epsilon(1e-6));
  CHECK(r.extremal_value < kBound);
  CHECK(r.property == "bound_1_minus_1_over_e");
}

TEST_CASE("verify_bound (1,1,1): e^z escapes the band, witness at the rim") {
  const VerificationReport r =
      verify_bound(LeRoyParams(1, 1, 1), GridSpec::default_grid());
  CHECK(!r.pass);
  REQUIRE(r.witness.has_value());
  CHECK(std::abs(*r.witness - C(0.999, 0.0)) <= 1e-9);
  CHECK(r.extremal_value == doctest::Approx(std::exp(0.999) - 1.0).epsilon(1e-9));
}

TEST_CASE("verify_bound on a degenerate grid near the origin") {
  GridSpec g;
  g.radii = {1e-6};
  g.angles_per_circle = 64;
  const VerificationReport r = verify_bound(LeRoyParams(3, 1, 1), g);
  CHECK(r.pass);
  // F(z) - 1 = z/Gamma(4) + O(z^2).
  CHECK(r.extremal_value == doctest::Approx(1e-6 / 6.0).epsilon(1e-3));
}

TEST_CASE("verify_bound requires F(0) = 1") {
  CHECK_THROWS_AS(verify_bound(LeRoyParams(1, 3, 1), GridSpec::default_grid()),
                  NormalizationError);
}

TEST_CASE("verify_exp_subordination hand cases") {
  const VerificationReport strong =
      verify_exp_subordination(LeRoyParams(3, 1, 1), GridSpec::default_grid());
  CHECK(strong.pass);
  CHECK(strong.extremal_value < 0.2);

  // F = e^z subordinates itself: w(z) = z, sup |w| = outermost radius.
  const VerificationReport self =
      verify_exp_subordination(LeRoyParams(1, 1, 1), GridSpec::default_grid());
  CHECK(self.pass);
  CHECK(self.extremal_value == doctest::Approx(0.999).epsilon(1e-9));

  CHECK_THROWS_AS(
      verify_exp_subordination(LeRoyParams(1, 3, 1), GridSpec::default_grid()),
      NormalizationError);
}

TEST_CASE("subordination pass implies the modulus band max|F-1| <= e^m - 1") {
  for (const LeRoyParams& p : {LeRoyParams(3, 1, 1), LeRoyParams(2, 1, 1),
                               LeRoyParams{{2, 1, 1}, {3, 2, 1}}}) {
    const GridSpec g = GridSpec::default_grid();
    const VerificationReport sub = verify_exp_subordination(p, g);
    REQUIRE(sub.pass);
    const VerificationReport band = verify_bound(p, g);
    CHECK(band.extremal_value <= std::expm1(sub.extremal_value) + 1e-12);
  }
}

TEST_CASE("verify_starlike closed form for (1,1,1): zF'/F = 1 + z") {
  const VerificationReport r =
      verify_starlike(LeRoyParams(1, 1, 1), 0.999, 0.0, GridSpec::default_grid());
  CHECK(r.pass);
  CHECK(r.extremal_value == doctest::Approx(0.001).epsilon(1e-3));
  CHECK(std::abs(r.extremal_value - 0.001) <= 1e-6);
  CHECK(r.property == "starlike");

  const VerificationReport half = verify_starlike(LeRoyParams(1, 1, 1), 0.999,
                                                  0.5, GridSpec::default_grid());
  CHECK(!half.pass);
  REQUIRE(half.witness.has_value());
  CHECK(std::abs(*half.witness - C(-0.999, 0.0)) <= 1e-9);
  CHECK(half.property == "starlike_order(0.5)");

  CHECK(verify_starlike(LeRoyParams(2, 1, 1), 0.5, 0.0, GridSpec::default_grid())
            .pass);
}

TEST_CASE("verify_convex for (1,1,1): 1 + z(2+z)/(1+z) dips negative") {
  // Pre-derived: the circle minimum sits on the negative real axis and
  // crosses zero at radius (3 - sqrt 5)/2 = 0.38197.
  const VerificationReport fail =
      verify_convex(LeRoyParams(1, 1, 1), 0.45, 0.0, GridSpec::default_grid());
  CHECK(!fail.pass);
  REQUIRE(fail.witness.has_value());
  CHECK(std::abs(*fail.witness - C(-0.45, 0.0)) <= 1e-9);
  CHECK(std::abs(fail.extremal_value - (1.0 - 0.45 * (2.0 - 0.45) / (1.0 - 0.45))) <=
        1e-9);

  const VerificationReport ok =
      verify_convex(LeRoyParams(1, 1, 1), 0.2, 0.0, GridSpec::default_grid());
  CHECK(ok.pass);
  CHECK(std::abs(ok.extremal_value - 0.55) <= 1e-9);

  CHECK(verify_convex(LeRoyParams(3, 2, 1), 0.5, 0.0, GridSpec::default_grid())
            .pass);
}

TEST_CASE("witness reproducibility: re-evaluation reproduces the violation") {
  const VerificationReport r1 =
      verify_convex(LeRoyParams(1, 1, 1), 0.45, 0.0, GridSpec::default_grid());
  const VerificationReport r2 =
      verify_convex(LeRoyParams(1, 1, 1), 0.45, 0.0, GridSpec::default_grid());
  REQUIRE(!r1.pass);
  CHECK(*r1.witness == *r2.witness);
  CHECK(r1.extremal_value == r2.extremal_value);
  // Standalone evaluation of the property at the witness.
  const C z = *r1.witness;
  const double direct = (1.0 + z * (2.0 + z) / (1.0 + z)).real();
  CHECK(std::abs(direct - r1.extremal_value) <= 1e-9);
  CHECK(direct < 0.0);
}

TEST_CASE("grid refinement never converts fail to pass") {
  GridSpec dense = GridSpec::default_grid();
  dense.angles_per_circle = 1440;

  const VerificationReport coarse =
      verify_convex(LeRoyParams(1, 1, 1), 0.45, 0.0, GridSpec::default_grid());
  const VerificationReport fine =
      verify_convex(LeRoyParams(1, 1, 1), 0.45, 0.0, dense);
  CHECK(!coarse.pass);
  CHECK(!fine.pass);
  CHECK(fine.extremal_value <= coarse.extremal_value + 1e-9);

  const VerificationReport bc =
      verify_bound(LeRoyParams(1, 1, 1), GridSpec::default_grid());
  const VerificationReport bf = verify_bound(LeRoyParams(1, 1, 1), dense);
  CHECK(bf.extremal_value >= bc.extremal_value - 1e-9);
  CHECK(!bf.pass);
}

TEST_CASE("maximum modulus consistency across radii") {
  double prev = 0.0;
  for (double radius : {0.2, 0.5, 0.9, 0.999}) {
    GridSpec g;
    g.radii = {radius};
    const VerificationReport r = verify_bound(LeRoyParams(3, 1, 1), g);
    CHECK(r.extremal_value >= prev - 1e-12);
    prev = r.extremal_value;
  }
}

TEST_CASE("include_radial_rays densifies the radius set") {
  GridSpec g = GridSpec::default_grid();
  g.include_radial_rays = true;
  const VerificationReport r = verify_bound(LeRoyParams(3, 1, 1), g);
  CHECK(r.grid.radii.size() == 21);  // 11 circles plus 10 midpoints
  CHECK(r.pass);
}

TEST_CASE("exp-starlike Schwarz check surfaces the (2,1,1) counterexample") {
  // Certificate thm-4-2-star is satisfied at (2,1,1), yet
  // q(-0.999) = 1 + (s/2) tanh s at s = i 0.9995 sits outside exp(D).
  const VerificationReport r =
      verify_exp_starlike(LeRoyParams(2, 1, 1), GridSpec::default_grid());
  CHECK(!r.pass);
  CHECK(r.extremal_value == doctest::Approx(1.5026).epsilon(1e-3));
  REQUIRE(r.witness.has_value());
  CHECK(std::abs(*r.witness - C(-0.999, 0.0)) <= 1e-6);
  CHECK(r.notes.find("Schwarz") != std::string::npos);

  CHECK(verify_exp_starlike(LeRoyParams(3, 1, 1), GridSpec::default_grid()).pass);
}

TEST_CASE("path-continued logarithm engages when Re q dips below zero") {
  // (1.5,1,1): Re(zF'/F) reaches -0.19 near the rim, so the principal
  // branch guard fails and the radial continuation takes over.
  const VerificationReport r =
      verify_exp_starlike(LeRoyParams(1.5, 1, 1), GridSpec::default_grid());
  CHECK(!r.pass);
  CHECK(r.notes.find("path-continued") != std::string::npos);
}

TEST_CASE("close-to-convex check matches the Ozaki cases") {
  CHECK(verify_close_to_convex(LeRoyParams(2, 1, 1), GridSpec::default_grid())
            .pass);
  CHECK(verify_close_to_convex(LeRoyParams(3, 2, 1), GridSpec::default_grid())
            .pass);
}

TEST_CASE("growth inequality") {
  // theta = 1 turns the bound into the identity x e^x <= x e^x.
  const VerificationReport identity =
      verify_growth_inequality(LeRoyParams(1, 1, 1), 5.0, 100);
  CHECK(identity.pass);
  CHECK(std::abs(identity.extremal_value) <= 1e-12);

  const VerificationReport strict =
      verify_growth_inequality(LeRoyParams(2, 1, 1), 5.0, 100);
  CHECK(strict.pass);
  CHECK(strict.extremal_value < 0.0);

  const VerificationReport unmet =
      verify_growth_inequality(LeRoyParams(0.5, 0.5, 0.5), 5.0, 100);
  CHECK(unmet.notes.find("hypothesis unmet") != std::string::npos);
}

TEST_CASE("cross_validate agreement semantics") {
  const GridSpec g = GridSpec::default_grid();

  // Hypothesis and conclusion both hold.
  const AgreementRecord ok =
      cross_validate(check_theorem("thm-3-1", LeRoyParams(3, 1, 1)), g);
  CHECK(ok.certificate.satisfied);
  CHECK(ok.report.pass);
  CHECK(ok.agree);

  // The half-disk convexity claim fails at (1,1,1) although every clause
  // passes: witness near z = -0.499 with Re(1 + zF''/F') = -0.495.
  const AgreementRecord clash =
      cross_validate(check_theorem("thm-5-1-cvx", LeRoyParams(1, 1, 1)), g);
  CHECK(clash.certificate.satisfied);
  CHECK(!clash.report.pass);
  CHECK(!clash.agree);
  REQUIRE(clash.report.witness.has_value());
  CHECK(clash.report.witness->real() < -0.45);
  CHECK(std::abs(*clash.report.witness) == doctest::Approx(0.499).epsilon(1e-9));
  CHECK(clash.report.extremal_value == doctest::Approx(-0.495008).epsilon(1e-4));

  // Unsatisfied certificates agree vacuously.
  const AgreementRecord vacuous =
      cross_validate(check_theorem("thm-3-1", LeRoyParams(1, 1, 1)), g);
  CHECK(!vacuous.certificate.satisfied);
  CHECK(vacuous.agree);
}

TEST_CASE("cross_validate survives non-normalized params") {
  // Gamma(3) = 2 breaks F(0) = 1; the unit clause fails, the synthesized
  // report carries the origin witness, and the record agrees vacuously.
  const AgreementRecord rec =
      cross_validate(check_theorem("thm-3-2", LeRoyParams(1, 3, 1)),
                     GridSpec::default_grid());
  CHECK(!rec.certificate.satisfied);
  CHECK(!rec.report.pass);
  CHECK(rec.report.notes.find("normalization") != std::string::npos);
  REQUIRE(rec.report.witness.has_value());
  CHECK(*rec.report.witness == C(0.0, 0.0));
  CHECK(rec.agree);
}

TEST_CASE("grid validation") {
  GridSpec bad;
  bad.radii = {0.5, 0.4};
  CHECK_THROWS_AS(verify_bound(LeRoyParams(3, 1, 1), bad), std::invalid_argument);
  GridSpec big;
  big.radii = {1.5};
  CHECK_THROWS_AS(verify_bound(LeRoyParams(3, 1, 1), big), std::invalid_argument);
  GridSpec coarse;
  coarse.radii = {0.5};
  coarse.angles_per_circle = 32;
  CHECK_THROWS_AS(verify_bound(LeRoyParams(3, 1, 1), coarse),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      verify_starlike(LeRoyParams(1, 1, 1), 1.2, 0.0, GridSpec::default_grid()),
      std::invalid_argument);
}

TEST_CASE("sample_grid emits one value per point in deterministic order") {
  GridSpec g;
  g.radii = {0.3, 0.6};
  g.angles_per_circle = 64;
  const auto samples =
      sample_grid(LeRoyParams(1, 1, 1), "starlike", 0.6, 0.0, g);
  REQUIRE(samples.size() == 2 * 64);
  CHECK(samples.front().radius == doctest::Approx(0.3));
  CHECK(samples.front().angle == 0.0);
  // zF'/F = 1 + z for (1,1,1): value at angle 0, radius 0.3 is 1.3.
  CHECK(samples.front().value == doctest::Approx(1.3).epsilon(1e-9));
}
