#include "qcorr/states.hpp"

#include <cmath>

namespace qcorr {

std::array<double, 4> bell_spectrum(const BellDiagonalCoeffs& c) {
  return {0.25 * (1.0 - c.c1 - c.c2 - c.c3), 0.25 * (1.0 - c.c1 + c.c2 + c.c3),
          0.25 * (1.0 + c.c1 - c.c2 + c.c3), 0.25 * (1.0 + c.c1 + c.c2 - c.c3)};
}

bool is_physical(const BellDiagonalCoeffs& c, double tol) {
  for (double lambda : bell_spectrum(c)) {
    if (!(lambda >= -tol)) {
      return false;
    }
  }
  return true;
}

double thermal_werner_coefficient(double alpha) {
  // Both branches are exact rewrites of (e^{-a} - e^{3a}) / (3 e^{-a} + e^{3a});
  // the dominant exponential is factored out so extreme alpha cannot overflow.
  if (alpha >= 0.0) {
    const double s = std::exp(-4.0 * alpha);
    return (s - 1.0) / (3.0 * s + 1.0);
  }
  const double u = std::exp(4.0 * alpha);
  return (1.0 - u) / (3.0 + u);
}

ThermalState thermal_xxx(double J, double T) {
  if (!std::isfinite(T) || T <= 0.0) {
    throw InvalidTemperatureError("thermal_xxx: temperature must be finite and > 0");
  }
  if (!std::isfinite(J)) {
    throw InvalidTemperatureError("thermal_xxx: coupling must be finite");
  }

  ThermalState state;
  state.J = J;
  state.T = T;
  state.alpha = J / (4.0 * T);

  const double c = thermal_werner_coefficient(state.alpha);
  state.coeffs = {c, c, c};

  // Normalized matrix elements in the standard basis, from the same shifted
  // forms as the coefficient: diag (d0, d1, d1, d0) with off-diagonal `off`
  // coupling |01> and |10>. Algebraically d0 = (1+c)/4, d1 = (1-c)/4,
  // off = c/2.
  const double d0 = 0.25 * (1.0 + c);
  const double d1 = 0.25 * (1.0 - c);
  const double off = 0.5 * c;

  state.rho = ComplexMatrix::Zero(4, 4);
  state.rho(0, 0) = d0;
  state.rho(1, 1) = d1;
  state.rho(2, 2) = d1;
  state.rho(1, 2) = off;
  state.rho(2, 1) = off;
  state.rho(3, 3) = d0;

  // Literal partition function; may overflow to +inf for |alpha| beyond
  // double range, but nothing downstream divides by it.
  state.Z = 3.0 * std::exp(-state.alpha) + std::exp(3.0 * state.alpha);
  return state;
}

namespace {

ComplexMatrix bds_to_density_unchecked(const BellDiagonalCoeffs& c) {
  ComplexMatrix rho = 0.25 * kron(identity(2), identity(2));
  rho += 0.25 * c.c1 * kron(pauli_x(), pauli_x());
  rho += 0.25 * c.c2 * kron(pauli_y(), pauli_y());
  rho += 0.25 * c.c3 * kron(pauli_z(), pauli_z());
  return rho;
}

}  // namespace

ComplexMatrix bds_to_density(const BellDiagonalCoeffs& c) {
  if (!is_physical(c)) {
    throw UnphysicalCoefficientsError("bds_to_density: a Bell-basis eigenvalue is < -1e-12");
  }
  return bds_to_density_unchecked(c);
}

BdsProjection density_to_bds(const ComplexMatrix& rho) {
  BdsProjection projection;
  projection.coeffs.c1 = (rho * kron(pauli_x(), pauli_x())).trace().real();
  projection.coeffs.c2 = (rho * kron(pauli_y(), pauli_y())).trace().real();
  projection.coeffs.c3 = (rho * kron(pauli_z(), pauli_z())).trace().real();
  projection.residual = trace_norm(rho - bds_to_density_unchecked(projection.coeffs));
  return projection;
}

}  // namespace qcorr
