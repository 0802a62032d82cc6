#include "qcorr/channels.hpp"

#include <cmath>

namespace qcorr {

namespace {

void check_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw OutOfRangeError(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

ChannelSpec kraus_bf(double p) {
  check_unit_interval(p, "kraus_bf: p");
  ChannelSpec ch;
  ch.kind = ChannelKind::BitFlip;
  ch.p = p;
  ch.kraus.push_back(std::sqrt(1.0 - p / 2.0) * identity(2));
  ch.kraus.push_back(std::sqrt(p / 2.0) * pauli_x());
  return ch;
}

ChannelSpec kraus_gad(double p, double gamma) {
  check_unit_interval(p, "kraus_gad: p");
  check_unit_interval(gamma, "kraus_gad: gamma");
  ChannelSpec ch;
  ch.kind = ChannelKind::GeneralizedAmplitudeDamping;
  ch.p = p;
  ch.gamma = gamma;

  const double root_keep = std::sqrt(1.0 - gamma);
  const double root_damp = std::sqrt(gamma);

  ComplexMatrix e0 = ComplexMatrix::Zero(2, 2);
  e0(0, 0) = 1.0;
  e0(1, 1) = root_keep;
  ComplexMatrix e1 = ComplexMatrix::Zero(2, 2);
  e1(0, 1) = root_damp;
  ComplexMatrix e2 = ComplexMatrix::Zero(2, 2);
  e2(0, 0) = root_keep;
  e2(1, 1) = 1.0;
  ComplexMatrix e3 = ComplexMatrix::Zero(2, 2);
  e3(1, 0) = root_damp;

  ch.kraus.push_back(std::sqrt(p) * e0);
  ch.kraus.push_back(std::sqrt(p) * e1);
  ch.kraus.push_back(std::sqrt(1.0 - p) * e2);
  ch.kraus.push_back(std::sqrt(1.0 - p) * e3);
  return ch;
}

ComplexMatrix apply_channel(const ComplexMatrix& rho, const ChannelSpec& ch) {
  validate_density_matrix(rho, "apply_channel");
  ComplexMatrix evolved = ComplexMatrix::Zero(4, 4);
  for (const ComplexMatrix& ei : ch.kraus) {
    for (const ComplexMatrix& ej : ch.kraus) {
      const ComplexMatrix k = kron(ei, ej);
      evolved += k * rho * k.adjoint();
    }
  }
  return evolved;
}

BellDiagonalCoeffs evolve_coeffs(const BellDiagonalCoeffs& c, const ChannelSpec& ch) {
  if (ch.kind == ChannelKind::BitFlip) {
    const double shrink = (1.0 - ch.p) * (1.0 - ch.p);
    return {c.c1, c.c2 * shrink, c.c3 * shrink};
  }
  if (std::abs(ch.p - 0.5) > 1e-12) {
    throw UnsupportedParametersError(
        "evolve_coeffs: GAD preserves the Bell-diagonal form only at p = 1/2");
  }
  const double keep = 1.0 - ch.gamma;
  return {c.c1 * keep, c.c2 * keep, c.c3 * keep * keep};
}

double verify_channel_consistency(const BellDiagonalCoeffs& c, const ChannelSpec& ch) {
  const ComplexMatrix kraus_path = apply_channel(bds_to_density(c), ch);
  const ComplexMatrix coeff_path = bds_to_density(evolve_coeffs(c, ch));
  return trace_norm(kraus_path - coeff_path);
}

}  // namespace qcorr
