#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/measures.hpp"

namespace qcorr {

/// Inclusive linear axis with `steps` sample points (steps == 1 -> {min}).
struct AxisSpec {
  double min{0.0};
  double max{0.0};
  int steps{1};
};

std::vector<double> axis_values(const AxisSpec& axis);

enum class NoiseKind { None, BitFlip, Gad };

struct NoiseSetting {
  NoiseKind kind{NoiseKind::None};
  double p{0.0};
  double gamma{0.0};
};

struct MeasureSelection {
  bool qd{true};
  bool gqd1{true};
  bool concurrence{true};
};

struct SweepConfig {
  AxisSpec j_range{-4.0, 4.0, 81};
  AxisSpec t_range{0.1, 3.0, 59};
  NoiseSetting channel;
  MeasureSelection measures;
  bool oracle_mode{false};
  std::uint64_t seed{1};
  std::filesystem::path output_path;  // empty -> no file written
};

/// One grid point. c1..c3 are the post-channel coefficients; the measure
/// fields are present iff selected, the *_numeric fields iff oracle_mode.
struct SweepRecord {
  double J{0.0};
  double T{0.0};
  double alpha{0.0};
  double p{0.0};
  double gamma{0.0};
  double c1{0.0};
  double c2{0.0};
  double c3{0.0};
  std::optional<double> qd;
  std::optional<double> gqd1;
  std::optional<double> concurrence;
  std::optional<double> qd_numeric;
  std::optional<double> gqd1_numeric;
};

/// Evaluates the Cartesian (J, T) grid, rows sorted by (J, T). If
/// cfg.output_path is set the CSV is written atomically (temp file + rename).
/// Invalid configs are rejected (std::invalid_argument) before any
/// computation; IO failures raise std::runtime_error naming the path.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

std::vector<std::string> csv_header(const SweepConfig& cfg);
void write_sweep_csv(const std::filesystem::path& path, const SweepConfig& cfg,
                     const std::vector<SweepRecord>& rows);

struct FigureFile {
  std::filesystem::path path;
  std::vector<SweepRecord> rows;
};

/// Optional grid overrides for figure datasets (axes not overridden keep the
/// per-figure defaults).
struct FigureGrid {
  std::optional<AxisSpec> j_range;
  std::optional<AxisSpec> t_range;
};

/// Emits the CSV dataset(s) behind figure `fig_id` (1..8) into out_dir:
///   1: noiseless discord surface + J slices     2: same for 1-norm discord
///   3: noiseless concurrence vs T and vs J      4: all measures vs J at T=1
///   5: bit-flip p=1/2 surface (all measures)    6: bit-flip slice at T=1
///   7: GAD gamma=1/2 surface (all measures)     8: GAD slice at T=1
/// Throws OutOfRangeError for unknown ids.
std::vector<FigureFile> figure_dataset(int fig_id, const std::filesystem::path& out_dir,
                                       const FigureGrid& grid = {});

/// Critical temperature where the concurrence of the (noise-evolved) thermal
/// state vanishes, located by bisection to bracket width < 1e-9; the returned
/// point satisfies concurrence <= 1e-10. Requires J > 0; throws
/// NoEntanglementError when the concurrence is already zero at T -> 0+.
double sudden_death_temperature(double J, const NoiseSetting& channel);

/// Sign of gqd1 - qd with a +-1e-9 zero band.
int ordering_sign(double diff);

struct OrderingCrossing {
  double T{0.0};
  double j_lo{0.0};
  double j_hi{0.0};
};

struct OrderingReport {
  std::size_t n_positive{0};
  std::size_t n_zero{0};
  std::size_t n_negative{0};
  double min_diff{0.0};
  double max_diff{0.0};
  std::vector<OrderingCrossing> crossings;
  std::string verdict;
  std::vector<SweepRecord> rows;
};

/// Partitions the grid by sign(gqd1 - qd), reports sign fractions and the
/// crossing loci, and declares "ordering violated" when both signs occur.
/// Requires qd and gqd1 to be selected. If cfg.output_path is set, writes a
/// per-point CSV (J, T, qd, gqd1, diff, sign).
OrderingReport ordering_report(const SweepConfig& cfg);

std::string format_ordering_report(const OrderingReport& report);

}  // namespace qcorr
