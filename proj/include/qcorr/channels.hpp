#pragma once

#include <vector>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

enum class ChannelKind { BitFlip, GeneralizedAmplitudeDamping };

/// A single-qubit decoherence channel given by its Kraus set.
/// Invariant: sum_k E_k^dag E_k = I within 1e-12.
struct ChannelSpec {
  ChannelKind kind{ChannelKind::BitFlip};
  double p{0.0};
  double gamma{0.0};  // unused for BitFlip
  std::vector<ComplexMatrix> kraus;
};

/// Bit flip: E0 = sqrt(1 - p/2) I, E1 = sqrt(p/2) sigma_x.
/// Throws OutOfRangeError for p outside [0, 1].
ChannelSpec kraus_bf(double p);

/// Generalized amplitude damping with mixing parameter p and damping gamma
/// (four Kraus elements). Throws OutOfRangeError for parameters outside [0, 1].
ChannelSpec kraus_gad(double p, double gamma);

/// Applies the channel independently to both qubits:
///   rho -> sum_{i,j} (E_i (x) E_j) rho (E_i^dag (x) E_j^dag).
/// Both tensor factors are conjugated; that is the unique trace-preserving
/// product form for a single Kraus family.
ComplexMatrix apply_channel(const ComplexMatrix& rho, const ChannelSpec& ch);

/// Closed-form coefficient map of the two-qubit channel on Bell-diagonal
/// states:
///   BitFlip: (c1, c2 (1-p)^2, c3 (1-p)^2)          for any p
///   GAD:     (c1 (1-g), c2 (1-g), c3 (1-g)^2)      only at p = 1/2
/// GAD with p != 1/2 does not preserve the Bell-diagonal form and throws
/// UnsupportedParametersError here; apply_channel still handles it.
BellDiagonalCoeffs evolve_coeffs(const BellDiagonalCoeffs& c, const ChannelSpec& ch);

/// Trace-norm distance between the Kraus evolution and the coefficient-map
/// evolution of the state with coefficients c. Contract: < 1e-10 whenever
/// evolve_coeffs accepts the channel.
double verify_channel_consistency(const BellDiagonalCoeffs& c, const ChannelSpec& ch);

}  // namespace qcorr
