#include "qcorr/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <string>

namespace qcorr {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kEigenvalueClampTol = 1e-10;

}  // namespace

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m = [] {
    ComplexMatrix p(2, 2);
    p << 0, 1, 1, 0;
    return p;
  }();
  return m;
}

const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m = [] {
    ComplexMatrix p(2, 2);
    p << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return p;
  }();
  return m;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m = [] {
    ComplexMatrix p(2, 2);
    p << 1, 0, 0, -1;
    return p;
  }();
  return m;
}

ComplexMatrix identity(Eigen::Index dim) { return ComplexMatrix::Identity(dim, dim); }

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    return false;
  }
  const double residual = (m - m.adjoint()).cwiseAbs().maxCoeff();
  // NaN entries fail the comparison and are reported as non-Hermitian.
  return residual < tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

Spectrum hermitian_eig(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw BadDimensionError("hermitian_eig: matrix is not square");
  }
  if (!is_hermitian(m, kHermitianTol)) {
    throw NotHermitianError("hermitian_eig: max|M - M^dag| >= 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NotHermitianError("hermitian_eig: eigensolver failed to converge");
  }
  // Eigen sorts ascending; flip to descending.
  Spectrum spectrum;
  spectrum.eigenvalues = solver.eigenvalues().reverse();
  spectrum.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return spectrum;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw BadDimensionError("partial_trace: expected a 4x4 matrix");
  }
  ComplexMatrix reduced = ComplexMatrix::Zero(2, 2);
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      for (Eigen::Index k = 0; k < 2; ++k) {
        if (keep == Subsystem::A) {
          reduced(i, j) += rho(2 * i + k, 2 * j + k);
        } else {
          reduced(i, j) += rho(2 * k + i, 2 * k + j);
        }
      }
    }
  }
  return reduced;
}

double trace_norm(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

double trace_norm_hermitian(const ComplexMatrix& m) {
  if (!is_hermitian(m, kHermitianTol)) {
    throw NotHermitianError("trace_norm_hermitian: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  if (rho.rows() != rho.cols()) {
    throw NotDensityMatrixError("von_neumann_entropy: matrix is not square");
  }
  if (!is_hermitian(rho, kHermitianTol)) {
    throw NotDensityMatrixError("von_neumann_entropy: matrix is not Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10) {
    throw NotDensityMatrixError("von_neumann_entropy: trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    double lambda = solver.eigenvalues()[i];
    if (lambda < -kEigenvalueClampTol) {
      throw NotDensityMatrixError("von_neumann_entropy: eigenvalue below -1e-10 (" +
                                  std::to_string(lambda) + ")");
    }
    if (lambda <= 0.0) {
      continue;  // clamped roundoff, 0 log 0 := 0
    }
    entropy -= lambda * std::log2(lambda);
  }
  return entropy;
}

void validate_density_matrix(const ComplexMatrix& rho, const char* context) {
  const std::string where(context);
  if (rho.rows() != rho.cols()) {
    throw NotDensityMatrixError(where + ": matrix is not square");
  }
  if (!is_hermitian(rho, kHermitianTol)) {
    throw NotDensityMatrixError(where + ": matrix is not Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10) {
    throw NotDensityMatrixError(where + ": trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kEigenvalueClampTol) {
    throw NotDensityMatrixError(where + ": matrix is not positive semidefinite");
  }
}

}  // namespace qcorr
