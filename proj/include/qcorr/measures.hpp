#pragma once

#include <cstdint>
#include <utility>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Rank-1 projective measurement basis on a single qubit, parametrized by the
/// Bloch direction n = (sin t cos f, sin t sin f, cos t). The projectors are
/// B_pm = (I pm n.sigma)/2.
struct MeasurementBasis {
  double theta{0.0};  // polar angle in [0, pi]
  double phi{0.0};    // azimuth in [0, 2 pi)

  Eigen::Vector3d direction() const;
  std::pair<ComplexMatrix, ComplexMatrix> projectors() const;
};

/// Zero-discord state q P+ (x) sigma0 + (1-q) P- (x) sigma1 with orthogonal
/// projectors P_pm on subsystem A and arbitrary single-qubit states on B,
/// each given by its Bloch vector (norm <= 1).
struct ClassicalQuantumState {
  MeasurementBasis basis;
  double q{0.5};
  Eigen::Vector3d bloch0{0.0, 0.0, 0.0};
  Eigen::Vector3d bloch1{0.0, 0.0, 0.0};

  ComplexMatrix to_density() const;
};

/// Settings for the derivative-free optimizers (coarse angular grid followed
/// by coordinate descent with shrinking steps, plus seeded random restarts).
/// Identical seeds give bit-identical results.
struct OptimizerConfig {
  int grid_resolution{24};
  int refine_iterations{200};
  int restarts{8};
  std::uint64_t seed{1};
};

struct ClassicalCorrelation {
  double value{0.0};
  MeasurementBasis basis;  // argmax measurement on subsystem B
};

/// Wootters concurrence from the spectrum of
/// sqrt(rho) (sy (x) sy) rho^* (sy (x) sy) sqrt(rho), which shares its
/// eigenvalues with rho (sy (x) sy) rho^* (sy (x) sy) but stays Hermitian.
double concurrence(const ComplexMatrix& rho);

/// Closed-form concurrence of the noiseless XXX thermal state as a function
/// of alpha = J/(4T). Overflow-guarded for any alpha.
double concurrence_xxx_analytic(double alpha);

/// Literal transcriptions of the published closed forms for concurrence under
/// bit-flip / GAD noise, kept for auditing only: both deviate from the
/// Wootters value (see the verify report), so the Kraus + Wootters path is
/// authoritative everywhere. The unbalanced bracket in the published GAD
/// expression is closed at the end of the expression.
double concurrence_bf_analytic(double alpha, double p);
double concurrence_gad_analytic(double alpha, double gamma);

/// S(rho_A) + S(rho_B) - S(rho_AB).
double mutual_information(const ComplexMatrix& rho);

/// max over projective measurements on subsystem B of
/// S(rho_A) - sum_k P_k S(rho^k), with rho^k the normalized post-measurement
/// state. Deterministic given cfg.seed.
ClassicalCorrelation classical_correlation(const ComplexMatrix& rho,
                                           const OptimizerConfig& cfg = {});

/// Analytic entropic discord of a Bell-diagonal state.
double qd_bds(const BellDiagonalCoeffs& c);

/// Entropic discord by measurement optimization:
/// mutual_information - classical_correlation. Values in (-1e-8, 0) are
/// clamped to 0; anything more negative indicates an optimizer inconsistency
/// and throws std::logic_error.
double qd_numeric(const ComplexMatrix& rho, const OptimizerConfig& cfg = {});

/// Analytic 1-norm geometric discord of a Bell-diagonal state: the median of
/// {|c1|, |c2|, |c3|}.
double gqd1_bds(const BellDiagonalCoeffs& c);

/// 1-norm geometric discord as the minimized trace distance to the
/// classical-quantum set, over all 9 parameters of ClassicalQuantumState.
/// Upper-bound minimizer: every evaluation is a feasible distance, so the
/// result is never below the true minimum (up to eigensolver roundoff).
double gqd1_numeric(const ComplexMatrix& rho, const OptimizerConfig& cfg = {});

}  // namespace qcorr
