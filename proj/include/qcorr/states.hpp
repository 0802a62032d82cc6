#pragma once

#include <array>

#include "qcorr/linalg.hpp"

namespace qcorr {

/// Correlation triple (c1, c2, c3) of a two-qubit state that is diagonal in
/// the Bell basis: rho = (1/4)[I (x) I + sum_i c_i sigma_i (x) sigma_i].
struct BellDiagonalCoeffs {
  double c1{0.0};
  double c2{0.0};
  double c3{0.0};
};

/// The four Bell-basis eigenvalues of the state with coefficients c, in the
/// fixed order (psi-, phi-, phi+, psi+):
///   { (1-c1-c2-c3)/4, (1-c1+c2+c3)/4, (1+c1-c2+c3)/4, (1+c1+c2-c3)/4 }.
std::array<double, 4> bell_spectrum(const BellDiagonalCoeffs& c);

/// Physical iff every Bell-basis eigenvalue is >= -tol.
bool is_physical(const BellDiagonalCoeffs& c, double tol = 1e-12);

/// Werner coefficient c(alpha) of the XXX Gibbs state, c1 = c2 = c3 = c.
/// Computed in a shifted form that stays finite for any alpha:
///   alpha >= 0: (s - 1) / (3s + 1) with s = e^{-4 alpha}
///   alpha <  0: (1 - u) / (3 + u) with u = e^{ 4 alpha}
double thermal_werner_coefficient(double alpha);

/// Two-qubit XXX Gibbs state at coupling J and temperature T (k = hbar = 1).
struct ThermalState {
  double J{0.0};
  double T{0.0};
  double alpha{0.0};  // J / (4 T)
  double Z{0.0};      // partition function, 3 e^{-alpha} + e^{3 alpha}
  BellDiagonalCoeffs coeffs;
  ComplexMatrix rho;
};

/// Throws InvalidTemperatureError for T <= 0 or non-finite J or T.
ThermalState thermal_xxx(double J, double T);

/// Builds (1/4)[I (x) I + sum_i c_i sigma_i (x) sigma_i].
/// Throws UnphysicalCoefficientsError when a Bell eigenvalue < -1e-12.
ComplexMatrix bds_to_density(const BellDiagonalCoeffs& c);

/// Coefficients extracted as c_i = Tr[rho (sigma_i (x) sigma_i)], plus the
/// trace-norm distance between rho and the Bell-diagonal reconstruction.
/// Never throws on non-Bell-diagonal input; the residual reports how far off
/// the reconstruction is.
struct BdsProjection {
  BellDiagonalCoeffs coeffs;
  double residual{0.0};
};

BdsProjection density_to_bds(const ComplexMatrix& rho);

}  // namespace qcorr
