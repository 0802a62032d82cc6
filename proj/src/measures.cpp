#include "qcorr/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace qcorr {

namespace {

void validate_optimizer(const OptimizerConfig& cfg) {
  if (cfg.grid_resolution < 1 || cfg.refine_iterations < 1 || cfg.restarts < 1) {
    throw std::invalid_argument("OptimizerConfig: all counts must be >= 1");
  }
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// 53-bit uniform in [0, 1); avoids std::uniform_real_distribution so results
// are identical across standard-library implementations.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Eigen::Vector3d random_bloch_vector(std::mt19937_64& rng) {
  while (true) {
    Eigen::Vector3d b(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0,
                      2.0 * uniform01(rng) - 1.0);
    if (b.squaredNorm() <= 1.0) {
      return b;
    }
  }
}

double abs_eigenvalue_sum(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

struct DescentResult {
  std::vector<double> point;
  double value{0.0};
};

// Greedy per-coordinate probing with globally shrinking steps. Only accepts
// improvements, so the best value can never regress below the start.
DescentResult coordinate_descent(const std::function<double(const std::vector<double>&)>& objective,
                                 const std::function<void(std::vector<double>&)>& project,
                                 std::vector<double> x, std::vector<double> step,
                                 int iterations) {
  project(x);
  double fx = objective(x);
  for (int it = 0; it < iterations; ++it) {
    bool improved = false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> y = x;
        y[k] += sign * step[k];
        project(y);
        const double fy = objective(y);
        if (fy < fx) {
          x = std::move(y);
          fx = fy;
          improved = true;
          break;
        }
      }
    }
    if (!improved) {
      double largest = 0.0;
      for (double& s : step) {
        s *= 0.5;
        largest = std::max(largest, s);
      }
      if (largest < 1e-12) {
        break;
      }
    }
  }
  return {std::move(x), fx};
}

ComplexMatrix single_qubit_from_bloch(const Eigen::Vector3d& b) {
  return 0.5 * (identity(2) + b.x() * pauli_x() + b.y() * pauli_y() + b.z() * pauli_z());
}

Eigen::Vector3d bloch_of(const ComplexMatrix& sigma) {
  return {(sigma * pauli_x()).trace().real(), (sigma * pauli_y()).trace().real(),
          (sigma * pauli_z()).trace().real()};
}

MeasurementBasis normalized_basis(double theta, double phi) {
  const double two_pi = 2.0 * M_PI;
  theta = std::fmod(theta, two_pi);
  if (theta < 0.0) {
    theta += two_pi;
  }
  if (theta > M_PI) {
    theta = two_pi - theta;
    phi += M_PI;
  }
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) {
    phi += two_pi;
  }
  return {theta, phi};
}

}  // namespace

Eigen::Vector3d MeasurementBasis::direction() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

std::pair<ComplexMatrix, ComplexMatrix> MeasurementBasis::projectors() const {
  const Eigen::Vector3d n = direction();
  const ComplexMatrix n_dot_sigma =
      n.x() * pauli_x() + n.y() * pauli_y() + n.z() * pauli_z();
  return {0.5 * (identity(2) + n_dot_sigma), 0.5 * (identity(2) - n_dot_sigma)};
}

ComplexMatrix ClassicalQuantumState::to_density() const {
  const auto [plus, minus] = basis.projectors();
  return q * kron(plus, single_qubit_from_bloch(bloch0)) +
         (1.0 - q) * kron(minus, single_qubit_from_bloch(bloch1));
}

double concurrence(const ComplexMatrix& rho) {
  validate_density_matrix(rho, "concurrence");
  if (rho.rows() != 4) {
    throw NotDensityMatrixError("concurrence: expected a two-qubit (4x4) state");
  }
  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  const ComplexMatrix flipped = yy * rho.conjugate() * yy;

  // sqrt(rho) via the spectral decomposition, then the Hermitian conjugate
  // sqrt(rho) flipped sqrt(rho), which shares the spectrum of rho * flipped.
  const Spectrum spectrum = hermitian_eig(rho);
  const Eigen::VectorXcd root_values =
      spectrum.eigenvalues.cwiseMax(0.0).cwiseSqrt().cast<Complex>();
  const ComplexMatrix root =
      spectrum.eigenvectors * root_values.asDiagonal() * spectrum.eigenvectors.adjoint();

  ComplexMatrix m = root * flipped * root;
  m = 0.5 * (m + ComplexMatrix(m.adjoint()));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd lambdas = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();

  // Solver order is ascending: lambdas[3] is the largest.
  const double value = lambdas[3] - lambdas[2] - lambdas[1] - lambdas[0];
  return std::clamp(value, 0.0, 1.0);
}

double concurrence_xxx_analytic(double alpha) {
  // max(0, (e^{3a} - 3 e^{-a}) / (e^{3a} + 3 e^{-a})) with the dominant
  // exponential factored out.
  if (alpha >= 0.0) {
    const double s = std::exp(-4.0 * alpha);
    return std::max(0.0, (1.0 - 3.0 * s) / (1.0 + 3.0 * s));
  }
  const double u = std::exp(4.0 * alpha);
  return std::max(0.0, (u - 3.0) / (u + 3.0));
}

double concurrence_bf_analytic(double alpha, double p) {
  // Transcribed as published. In terms of the Werner coefficient c(alpha):
  // (2/Z) e^a sinh 2a == -c and (4/Z) e^{-a} - 1 == c, which keeps the
  // expression finite for any alpha.
  const double c = thermal_werner_coefficient(alpha);
  const double flip_term = std::abs(-c * (1.0 + (1.0 + p) * (1.0 + p)));
  const double decay_term = 1.0 + c * (1.0 - p) * (1.0 - p);
  return 2.0 * std::max(0.0, flip_term - decay_term);
}

double concurrence_gad_analytic(double alpha, double gamma) {
  const double c = thermal_werner_coefficient(alpha);
  const double damp_term = std::abs(-2.0 * c * (1.0 - gamma));
  const double decay_term = 1.0 + c * (1.0 - gamma) * (1.0 - gamma);
  return 2.0 * std::max(0.0, damp_term - decay_term);
}

double mutual_information(const ComplexMatrix& rho) {
  validate_density_matrix(rho, "mutual_information");
  const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
  const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
  return s_a + s_b - von_neumann_entropy(rho);
}

ClassicalCorrelation classical_correlation(const ComplexMatrix& rho, const OptimizerConfig& cfg) {
  validate_density_matrix(rho, "classical_correlation");
  validate_optimizer(cfg);

  const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));

  const auto conditional_entropy = [&rho](const std::vector<double>& angles) {
    const MeasurementBasis basis{angles[0], angles[1]};
    const auto [plus, minus] = basis.projectors();
    double total = 0.0;
    for (const ComplexMatrix* b : {&plus, &minus}) {
      const ComplexMatrix m = kron(identity(2), *b);
      const ComplexMatrix post = m * rho * m;
      const double prob = post.trace().real();
      if (prob > 1e-14) {
        total += prob * von_neumann_entropy(post / prob);
      }
    }
    return total;
  };
  const auto no_projection = [](std::vector<double>&) {};

  // Coarse angular grid; it contains the coordinate axes, which are the
  // optimal directions for Bell-diagonal states.
  const int res = cfg.grid_resolution;
  std::vector<double> best{0.0, 0.0};
  double best_value = conditional_entropy(best);
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      const std::vector<double> angles{i * M_PI / res, j * 2.0 * M_PI / res};
      const double value = conditional_entropy(angles);
      if (value < best_value) {
        best_value = value;
        best = angles;
      }
    }
  }

  std::vector<std::vector<double>> starts{best};
  std::mt19937_64 rng(cfg.seed);
  for (int r = 0; r < cfg.restarts; ++r) {
    starts.push_back({uniform01(rng) * M_PI, uniform01(rng) * 2.0 * M_PI});
  }

  DescentResult winner{best, best_value};
  const std::vector<double> step{M_PI / res, M_PI / res};
  for (const auto& start : starts) {
    DescentResult refined =
        coordinate_descent(conditional_entropy, no_projection, start, step, cfg.refine_iterations);
    if (refined.value < winner.value) {
      winner = std::move(refined);
    }
  }

  double value = s_a - winner.value;
  if (value < 0.0) {
    if (value < -1e-8) {
      throw std::logic_error("classical_correlation: negative value beyond roundoff");
    }
    value = 0.0;
  }
  return {value, normalized_basis(winner.point[0], winner.point[1])};
}

double qd_bds(const BellDiagonalCoeffs& c) {
  if (!is_physical(c)) {
    throw UnphysicalCoefficientsError("qd_bds: coefficients are unphysical");
  }
  double bracket = 0.0;
  for (double lambda : bell_spectrum(c)) {
    bracket += xlog2x(4.0 * lambda);
  }
  bracket *= 0.25;

  const double cm = std::max({std::abs(c.c1), std::abs(c.c2), std::abs(c.c3)});
  const double classical = 0.5 * xlog2x(1.0 - cm) + 0.5 * xlog2x(1.0 + cm);
  return std::max(0.0, bracket - classical);
}

double qd_numeric(const ComplexMatrix& rho, const OptimizerConfig& cfg) {
  const double info = mutual_information(rho);
  const double classical = classical_correlation(rho, cfg).value;
  double discord = info - classical;
  if (discord < 0.0) {
    if (discord < -1e-8) {
      throw std::logic_error("qd_numeric: negative discord beyond roundoff");
    }
    discord = 0.0;
  }
  return discord;
}

double gqd1_bds(const BellDiagonalCoeffs& c) {
  if (!is_physical(c)) {
    throw UnphysicalCoefficientsError("gqd1_bds: coefficients are unphysical");
  }
  std::array<double, 3> magnitudes{std::abs(c.c1), std::abs(c.c2), std::abs(c.c3)};
  std::sort(magnitudes.begin(), magnitudes.end());
  return magnitudes[1];
}

double gqd1_numeric(const ComplexMatrix& rho, const OptimizerConfig& cfg) {
  validate_density_matrix(rho, "gqd1_numeric");
  validate_optimizer(cfg);

  // Parameter layout: theta, phi, q, bloch0 (3), bloch1 (3).
  const auto unpack = [](const std::vector<double>& x) {
    ClassicalQuantumState cq;
    cq.basis = {x[0], x[1]};
    cq.q = x[2];
    cq.bloch0 = {x[3], x[4], x[5]};
    cq.bloch1 = {x[6], x[7], x[8]};
    return cq;
  };
  const auto objective = [&rho, &unpack](const std::vector<double>& x) {
    return abs_eigenvalue_sum(rho - unpack(x).to_density());
  };
  const auto project = [](std::vector<double>& x) {
    x[2] = std::clamp(x[2], 0.0, 1.0);
    for (int base : {3, 6}) {
      Eigen::Map<Eigen::Vector3d> b(x.data() + base);
      const double norm = b.norm();
      if (norm > 1.0) {
        b /= norm;
      }
    }
  };

  // Heuristic start per direction: measure subsystem A along (theta, phi) and
  // use the dephased state's own weights and conditional B states. For a
  // Bell-diagonal input and an axis direction this is already optimal.
  const auto measured_start = [&rho](double theta, double phi) {
    const MeasurementBasis basis{theta, phi};
    const auto [plus, minus] = basis.projectors();
    std::vector<double> x{theta, phi, 0.5, 0, 0, 0, 0, 0, 0};
    const ComplexMatrix mp = kron(plus, identity(2));
    const ComplexMatrix mm = kron(minus, identity(2));
    const double q = std::clamp((mp * rho).trace().real(), 0.0, 1.0);
    x[2] = q;
    if (q > 1e-12) {
      const Eigen::Vector3d b = bloch_of(partial_trace(mp * rho * mp, Subsystem::B) / q);
      x[3] = b.x();
      x[4] = b.y();
      x[5] = b.z();
    }
    if (1.0 - q > 1e-12) {
      const Eigen::Vector3d b =
          bloch_of(partial_trace(mm * rho * mm, Subsystem::B) / (1.0 - q));
      x[6] = b.x();
      x[7] = b.y();
      x[8] = b.z();
    }
    return x;
  };

  const int res = cfg.grid_resolution;
  std::vector<double> best;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      std::vector<double> x = measured_start(i * M_PI / res, j * 2.0 * M_PI / res);
      project(x);
      const double value = objective(x);
      if (value < best_value) {
        best_value = value;
        best = std::move(x);
      }
    }
  }

  std::vector<std::vector<double>> starts{best};
  std::mt19937_64 rng(cfg.seed);
  for (int r = 0; r < cfg.restarts; ++r) {
    std::vector<double> x{uniform01(rng) * M_PI, uniform01(rng) * 2.0 * M_PI, uniform01(rng),
                          0, 0, 0, 0, 0, 0};
    const Eigen::Vector3d b0 = random_bloch_vector(rng);
    const Eigen::Vector3d b1 = random_bloch_vector(rng);
    x[3] = b0.x();
    x[4] = b0.y();
    x[5] = b0.z();
    x[6] = b1.x();
    x[7] = b1.y();
    x[8] = b1.z();
    starts.push_back(std::move(x));
  }

  DescentResult winner{best, best_value};
  const std::vector<double> step{M_PI / res, M_PI / res, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1};
  for (const auto& start : starts) {
    DescentResult refined =
        coordinate_descent(objective, project, start, step, cfg.refine_iterations);
    if (refined.value < winner.value) {
      winner = std::move(refined);
    }
  }
  return winner.value;
}

}  // namespace qcorr
