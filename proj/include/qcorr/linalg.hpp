#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qcorr/errors.hpp"

namespace qcorr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Which qubit of a two-qubit state survives a partial trace.
/// Subsystem A is the left tensor factor in the |00>,|01>,|10>,|11> ordering.
enum class Subsystem { A, B };

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
/// Column i of `eigenvectors` belongs to `eigenvalues[i]`.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;
};

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
ComplexMatrix identity(Eigen::Index dim);

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);

/// Kronecker product with standard block ordering: the left operand indexes
/// blocks, the right operand indexes within a block.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Throws NotHermitianError if max|M - M^dag| >= 1e-10.
Spectrum hermitian_eig(const ComplexMatrix& m);

/// Reduce a two-qubit density matrix to the single-qubit marginal of `keep`.
/// Throws BadDimensionError unless rho is 4x4.
ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep);

/// Sum of singular values. For Hermitian input this equals the sum of
/// absolute eigenvalues.
double trace_norm(const ComplexMatrix& m);

/// Trace norm computed as sum(|lambda_i|) of a Hermitian matrix; cheaper than
/// the SVD route and used in optimizer hot loops.
double trace_norm_hermitian(const ComplexMatrix& m);

/// -sum(lambda log2 lambda), with 0 log 0 := 0. Eigenvalues in [-1e-10, 0)
/// are clamped to zero; anything more negative, a non-unit trace, or a
/// non-Hermitian input raises NotDensityMatrixError.
double von_neumann_entropy(const ComplexMatrix& rho);

/// Validates hermiticity, unit trace and positivity (within 1e-10) and throws
/// NotDensityMatrixError naming `context` on failure.
void validate_density_matrix(const ComplexMatrix& rho, const char* context);

}  // namespace qcorr
