#pragma once

#include <cmath>
#include <random>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr::test {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double normal(std::mt19937_64& rng) {
  // Box-Muller; deterministic draw order.
  const double u1 = std::max(uniform01(rng), 1e-300);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, int dim) {
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      m(i, j) = Complex(normal(rng), normal(rng));
    }
  }
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, int dim) {
  const ComplexMatrix g = random_matrix(rng, dim);
  return 0.5 * (g + ComplexMatrix(g.adjoint()));
}

// Ginibre construction: always a valid density matrix.
inline ComplexMatrix random_density(std::mt19937_64& rng, int dim) {
  const ComplexMatrix g = random_matrix(rng, dim);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

// Uniform over the physical Bell tetrahedron via a flat Dirichlet on the
// Bell-basis eigenvalues.
inline BellDiagonalCoeffs random_physical_coeffs(std::mt19937_64& rng) {
  double lambda[4];
  double sum = 0.0;
  for (double& l : lambda) {
    l = -std::log(1.0 - uniform01(rng));
    sum += l;
  }
  for (double& l : lambda) {
    l /= sum;
  }
  BellDiagonalCoeffs c;
  c.c1 = lambda[2] + lambda[3] - lambda[0] - lambda[1];
  c.c2 = lambda[1] + lambda[3] - lambda[0] - lambda[2];
  c.c3 = lambda[1] + lambda[2] - lambda[0] - lambda[3];
  return c;
}

// |psi-><psi-| in the standard basis.
inline ComplexMatrix singlet_projector() {
  Eigen::Vector4cd psi;
  psi << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
  return psi * psi.adjoint();
}

// |phi+><phi+| in the standard basis.
inline ComplexMatrix phi_plus_projector() {
  Eigen::Vector4cd phi;
  phi << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  return phi * phi.adjoint();
}

}  // namespace qcorr::test
