#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qcorr/channels.hpp"
#include "qcorr/states.hpp"
#include "test_support.hpp"

using namespace qcorr;

TEST_CASE("thermal state at alpha = 0 is maximally mixed") {
  const ThermalState state = thermal_xxx(0.0, 1.0);
  CHECK(state.alpha == 0.0);
  CHECK(state.coeffs.c1 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(state.coeffs.c2 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(state.coeffs.c3 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK((state.rho - 0.25 * identity(4)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(state.Z == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("thermal state at J = 4, T = 1") {
  const ThermalState state = thermal_xxx(4.0, 1.0);
  CHECK(state.alpha == doctest::Approx(1.0).epsilon(1e-15));

  const double z = 2.0 * (std::exp(-1.0) + std::exp(1.0) * std::cosh(2.0));
  CHECK(state.Z == doctest::Approx(z).epsilon(1e-12));
  CHECK(state.Z == doctest::Approx(21.189175246701996).epsilon(1e-12));

  // recomputed from (e^-a - e^3a) / (3 e^-a + e^3a) at a = 1
  const double c = -0.9305533251033542;
  CHECK(state.coeffs.c1 == doctest::Approx(c).epsilon(1e-12));
  CHECK(state.coeffs.c2 == doctest::Approx(c).epsilon(1e-12));
  CHECK(state.coeffs.c3 == doctest::Approx(c).epsilon(1e-12));

  // entrywise against the literal matrix elements over Z
  CHECK(std::abs(state.rho(0, 0) - std::exp(-1.0) / z) < 1e-14);
  CHECK(std::abs(state.rho(3, 3) - std::exp(-1.0) / z) < 1e-14);
  CHECK(std::abs(state.rho(1, 1) - std::exp(1.0) * std::cosh(2.0) / z) < 1e-14);
  CHECK(std::abs(state.rho(2, 2) - std::exp(1.0) * std::cosh(2.0) / z) < 1e-14);
  CHECK(std::abs(state.rho(1, 2) - (-std::exp(1.0) * std::sinh(2.0) / z)) < 1e-14);
  CHECK(std::abs(state.rho(2, 1) - (-std::exp(1.0) * std::sinh(2.0) / z)) < 1e-14);
  CHECK(std::abs(state.rho(0, 1)) == 0.0);
  CHECK(std::abs(state.rho(0, 3)) == 0.0);

  CHECK((bds_to_density(state.coeffs) - state.rho).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("cold antiferromagnetic limit approaches the singlet") {
  const ThermalState state = thermal_xxx(1.0, 0.01);  // alpha = 25
  CHECK(std::abs(state.coeffs.c1 + 1.0) < 1e-8);
  CHECK(std::abs(state.coeffs.c2 + 1.0) < 1e-8);
  CHECK(std::abs(state.coeffs.c3 + 1.0) < 1e-8);
  CHECK((state.rho - test::singlet_projector()).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("thermal_xxx rejects invalid parameters") {
  CHECK_THROWS_AS(thermal_xxx(1.0, 0.0), InvalidTemperatureError);
  CHECK_THROWS_AS(thermal_xxx(1.0, -1.0), InvalidTemperatureError);
  CHECK_THROWS_AS(thermal_xxx(1.0, std::nan("")), InvalidTemperatureError);
  CHECK_THROWS_AS(thermal_xxx(1.0, std::numeric_limits<double>::infinity()),
                  InvalidTemperatureError);
  CHECK_THROWS_AS(thermal_xxx(std::nan(""), 1.0), InvalidTemperatureError);
  CHECK_THROWS_AS(thermal_xxx(std::numeric_limits<double>::infinity(), 1.0),
                  InvalidTemperatureError);
}

TEST_CASE("bds_to_density on the reference states") {
  CHECK((bds_to_density({0, 0, 0}) - 0.25 * identity(4)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((bds_to_density({-1, -1, -1}) - test::singlet_projector()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((bds_to_density({1, -1, 1}) - test::phi_plus_projector()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("bds_to_density rejects unphysical coefficients") {
  CHECK_THROWS_AS(bds_to_density({1, 1, 1}), UnphysicalCoefficientsError);
  CHECK_THROWS_AS(bds_to_density({-1, -1, 1}), UnphysicalCoefficientsError);
}

TEST_CASE("density_to_bds recovers coefficients and reports residuals") {
  const BdsProjection mixed = density_to_bds(0.25 * identity(4));
  CHECK(std::abs(mixed.coeffs.c1) < 1e-15);
  CHECK(std::abs(mixed.coeffs.c2) < 1e-15);
  CHECK(std::abs(mixed.coeffs.c3) < 1e-15);
  CHECK(mixed.residual < 1e-14);

  const ThermalState state = thermal_xxx(4.0, 1.0);
  const BdsProjection thermal = density_to_bds(state.rho);
  CHECK(thermal.coeffs.c1 == doctest::Approx(state.coeffs.c1).epsilon(1e-12));
  CHECK(thermal.residual < 1e-12);

  const ComplexMatrix evolved =
      apply_channel(bds_to_density({0.5, 0.3, 0.1}), kraus_gad(0.5, 0.4));
  const BdsProjection gad = density_to_bds(evolved);
  CHECK(gad.coeffs.c1 == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(gad.coeffs.c2 == doctest::Approx(0.18).epsilon(1e-12));
  CHECK(gad.coeffs.c3 == doctest::Approx(0.036).epsilon(1e-12));
  CHECK(gad.residual < 1e-12);
}

TEST_CASE("round trip over the Bell tetrahedron") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const BellDiagonalCoeffs c = test::random_physical_coeffs(rng);
    const BdsProjection back = density_to_bds(bds_to_density(c));
    CHECK(std::abs(back.coeffs.c1 - c.c1) < 1e-12);
    CHECK(std::abs(back.coeffs.c2 - c.c2) < 1e-12);
    CHECK(std::abs(back.coeffs.c3 - c.c3) < 1e-12);
    CHECK(back.residual < 1e-12);
  }
}

TEST_CASE("XXX thermal states are Werner states across the grid") {
  for (double J = -5.0; J <= 5.0 + 1e-9; J += 0.5) {
    for (double T = 0.05; T <= 5.0 + 1e-9; T += 0.2475) {
      const ThermalState state = thermal_xxx(J, T);
      CHECK(state.coeffs.c1 == state.coeffs.c2);
      CHECK(state.coeffs.c1 == state.coeffs.c3);
      CHECK(is_physical(state.coeffs));
    }
  }
}

TEST_CASE("shifted coefficient form agrees with the direct formula at moderate alpha") {
  for (double alpha = -40.0; alpha <= 40.0 + 1e-9; alpha += 0.7) {
    const double direct = (std::exp(-alpha) - std::exp(3.0 * alpha)) /
                          (3.0 * std::exp(-alpha) + std::exp(3.0 * alpha));
    CHECK(thermal_werner_coefficient(alpha) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("Gibbs construction matches the matrix-exponential oracle") {
  const ComplexMatrix coupling = kron(pauli_x(), pauli_x()) + kron(pauli_y(), pauli_y()) +
                                 kron(pauli_z(), pauli_z());
  for (double J : {-5.0, -2.0, -0.5, 0.5, 2.0, 5.0}) {
    for (double T : {0.02, 0.1, 0.5, 1.0, 2.5, 5.0}) {
      const Spectrum s = hermitian_eig(0.25 * J * coupling);
      const double ground = s.eigenvalues.minCoeff();
      Eigen::VectorXcd weights(4);
      for (int i = 0; i < 4; ++i) {
        weights[i] = std::exp(-(s.eigenvalues[i] - ground) / T);
      }
      ComplexMatrix gibbs = s.eigenvectors * weights.asDiagonal() * s.eigenvectors.adjoint();
      gibbs /= gibbs.trace().real();
      CHECK((gibbs - thermal_xxx(J, T).rho).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("coefficient sign follows the coupling sign") {
  double previous = -2.0;
  for (double T = 0.2; T <= 5.0 + 1e-9; T += 0.2) {
    const double c = thermal_xxx(2.0, T).coeffs.c3;
    CHECK(c < 0.0);
    CHECK(c > previous);  // increases toward 0 as T grows
    previous = c;
  }
  for (double T = 0.2; T <= 5.0 + 1e-9; T += 0.2) {
    CHECK(thermal_xxx(-2.0, T).coeffs.c3 > 0.0);
  }
}

TEST_CASE("extreme alpha saturates without overflow") {
  const ThermalState cold_afm = thermal_xxx(5.0, 1e-3);  // alpha = 1250
  CHECK(cold_afm.rho.allFinite());
  CHECK(cold_afm.coeffs.c1 == -1.0);
  CHECK((cold_afm.rho - test::singlet_projector()).cwiseAbs().maxCoeff() < 1e-15);

  const ThermalState cold_fm = thermal_xxx(-5.0, 1e-3);  // alpha = -1250
  CHECK(cold_fm.rho.allFinite());
  CHECK(cold_fm.coeffs.c1 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(std::abs(cold_fm.rho.trace().real() - 1.0) < 1e-15);
  CHECK(is_physical(cold_fm.coeffs));
}
