#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qcorr/channels.hpp"
#include "test_support.hpp"

using namespace qcorr;

namespace {

double completeness_residual(const ChannelSpec& ch) {
  ComplexMatrix sum = ComplexMatrix::Zero(2, 2);
  for (const ComplexMatrix& k : ch.kraus) {
    sum += k.adjoint() * k;
  }
  return (sum - identity(2)).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("bit-flip Kraus elements") {
  const ChannelSpec none = kraus_bf(0.0);
  REQUIRE(none.kraus.size() == 2);
  CHECK((none.kraus[0] - identity(2)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(none.kraus[1].cwiseAbs().maxCoeff() == 0.0);

  const ChannelSpec full = kraus_bf(1.0);
  const double inv_root2 = 1.0 / std::sqrt(2.0);
  CHECK((full.kraus[0] - inv_root2 * identity(2)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((full.kraus[1] - inv_root2 * pauli_x()).cwiseAbs().maxCoeff() < 1e-15);

  for (double p = 0.0; p <= 1.0 + 1e-12; p += 0.1) {
    CHECK(completeness_residual(kraus_bf(p)) < 1e-15);
  }
}

TEST_CASE("bit-flip rejects out-of-range probabilities") {
  CHECK_THROWS_AS(kraus_bf(-0.1), OutOfRangeError);
  CHECK_THROWS_AS(kraus_bf(1.1), OutOfRangeError);
  CHECK_THROWS_AS(kraus_bf(std::nan("")), OutOfRangeError);
}

TEST_CASE("GAD Kraus elements") {
  std::mt19937_64 rng(5);

  // gamma = 0 acts as the identity channel
  const ComplexMatrix rho = bds_to_density(test::random_physical_coeffs(rng));
  CHECK((apply_channel(rho, kraus_gad(0.3, 0.0)) - rho).cwiseAbs().maxCoeff() < 1e-14);

  // p = 1/2, gamma = 1 sends everything to the maximally mixed state
  const ComplexMatrix cooked = apply_channel(rho, kraus_gad(0.5, 1.0));
  CHECK((cooked - 0.25 * identity(4)).cwiseAbs().maxCoeff() < 1e-14);
  const BellDiagonalCoeffs flat = evolve_coeffs(test::random_physical_coeffs(rng), kraus_gad(0.5, 1.0));
  CHECK(flat.c1 == 0.0);
  CHECK(flat.c2 == 0.0);
  CHECK(flat.c3 == 0.0);

  // explicit entries at p = 1/2, gamma = 1/2
  const ChannelSpec ch = kraus_gad(0.5, 0.5);
  REQUIRE(ch.kraus.size() == 4);
  const double root_half = std::sqrt(0.5);
  CHECK(std::abs(ch.kraus[0](0, 0) - Complex(root_half)) < 1e-15);
  CHECK(std::abs(ch.kraus[0](1, 1) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(ch.kraus[1](0, 1) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(ch.kraus[1](1, 0)) == 0.0);
  CHECK(std::abs(ch.kraus[2](0, 0) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(ch.kraus[2](1, 1) - Complex(root_half)) < 1e-15);
  CHECK(std::abs(ch.kraus[3](1, 0) - Complex(0.5)) < 1e-15);

  for (double p : {0.0, 0.25, 0.5, 1.0}) {
    for (double gamma : {0.0, 0.3, 0.7, 1.0}) {
      CHECK(completeness_residual(kraus_gad(p, gamma)) < 1e-15);
    }
  }

  CHECK_THROWS_AS(kraus_gad(-0.1, 0.5), OutOfRangeError);
  CHECK_THROWS_AS(kraus_gad(0.5, 1.5), OutOfRangeError);
}

TEST_CASE("apply_channel on reference cases") {
  std::mt19937_64 rng(9);
  const ComplexMatrix rho = bds_to_density(test::random_physical_coeffs(rng));

  CHECK((apply_channel(rho, kraus_bf(0.0)) - rho).cwiseAbs().maxCoeff() < 1e-14);

  // full bit flip wipes the y and z correlations
  const BdsProjection wiped = density_to_bds(apply_channel(bds_to_density({0.5, 0.3, 0.1}), kraus_bf(1.0)));
  CHECK(wiped.coeffs.c1 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(wiped.coeffs.c2) < 1e-14);
  CHECK(std::abs(wiped.coeffs.c3) < 1e-14);
  CHECK(wiped.residual < 1e-12);

  const BdsProjection damped =
      density_to_bds(apply_channel(bds_to_density({0.5, 0.3, 0.1}), kraus_gad(0.5, 0.4)));
  CHECK(damped.coeffs.c1 == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(damped.coeffs.c2 == doctest::Approx(0.18).epsilon(1e-12));
  CHECK(damped.coeffs.c3 == doctest::Approx(0.036).epsilon(1e-12));
  CHECK(damped.residual < 1e-12);
}

TEST_CASE("apply_channel preserves trace and positivity") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix rho = test::random_density(rng, 4);
    const ChannelSpec ch = (trial % 2) ? kraus_bf(test::uniform01(rng))
                                       : kraus_gad(test::uniform01(rng), test::uniform01(rng));
    const ComplexMatrix evolved = apply_channel(rho, ch);
    CHECK(std::abs(evolved.trace().real() - 1.0) < 1e-12);
    CHECK(hermitian_eig(evolved).eigenvalues.minCoeff() > -1e-10);
  }
}

TEST_CASE("apply_channel rejects invalid states") {
  CHECK_THROWS_AS(apply_channel(identity(4), kraus_bf(0.5)), NotDensityMatrixError);
}

TEST_CASE("evolve_coeffs closed forms") {
  const BellDiagonalCoeffs c{-0.9, -0.9, -0.9};

  const BellDiagonalCoeffs none = evolve_coeffs(c, kraus_bf(0.0));
  CHECK(none.c1 == c.c1);
  CHECK(none.c2 == c.c2);
  CHECK(none.c3 == c.c3);

  const BellDiagonalCoeffs bf = evolve_coeffs(c, kraus_bf(0.5));
  CHECK(bf.c1 == doctest::Approx(-0.9).epsilon(1e-15));
  CHECK(bf.c2 == doctest::Approx(-0.225).epsilon(1e-15));
  CHECK(bf.c3 == doctest::Approx(-0.225).epsilon(1e-15));

  const BellDiagonalCoeffs gad = evolve_coeffs(c, kraus_gad(0.5, 0.5));
  CHECK(gad.c1 == doctest::Approx(-0.45).epsilon(1e-15));
  CHECK(gad.c2 == doctest::Approx(-0.45).epsilon(1e-15));
  CHECK(gad.c3 == doctest::Approx(-0.225).epsilon(1e-15));

  CHECK_THROWS_AS(evolve_coeffs(c, kraus_gad(0.3, 0.5)), UnsupportedParametersError);
}

TEST_CASE("Kraus and coefficient evolutions agree where the form is preserved") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const BellDiagonalCoeffs c = test::random_physical_coeffs(rng);
    CHECK(verify_channel_consistency(c, kraus_bf(test::uniform01(rng))) < 1e-10);
    CHECK(verify_channel_consistency(c, kraus_gad(0.5, test::uniform01(rng))) < 1e-10);
  }
  CHECK(verify_channel_consistency({0, 0, 0}, kraus_bf(0.7)) < 1e-14);
  CHECK(verify_channel_consistency({0, 0, 0}, kraus_gad(0.5, 0.7)) < 1e-14);
}

TEST_CASE("GAD off the symmetric point breaks the Bell-diagonal form") {
  const ComplexMatrix rho = bds_to_density({-0.9, -0.9, -0.9});
  for (double p : {0.0, 0.25, 1.0}) {
    const BdsProjection projection = density_to_bds(apply_channel(rho, kraus_gad(p, 0.5)));
    CHECK(projection.residual > 1e-6);
  }
}

TEST_CASE("both channels only shrink correlations") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const BellDiagonalCoeffs c = test::random_physical_coeffs(rng);
    const ChannelSpec ch = (trial % 2) ? kraus_bf(test::uniform01(rng))
                                       : kraus_gad(0.5, test::uniform01(rng));
    const BellDiagonalCoeffs evolved = evolve_coeffs(c, ch);
    CHECK(std::abs(evolved.c1) <= std::abs(c.c1) + 1e-15);
    CHECK(std::abs(evolved.c2) <= std::abs(c.c2) + 1e-15);
    CHECK(std::abs(evolved.c3) <= std::abs(c.c3) + 1e-15);
  }
}
