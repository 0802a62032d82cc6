#include "qcorr/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qcorr {

namespace fs = std::filesystem;

std::vector<double> axis_values(const AxisSpec& axis) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(axis.steps));
  if (axis.steps == 1) {
    values.push_back(axis.min);
    return values;
  }
  const double step = (axis.max - axis.min) / (axis.steps - 1);
  for (int i = 0; i < axis.steps; ++i) {
    values.push_back(axis.min + i * step);
  }
  return values;
}

namespace {

void validate_axis(const AxisSpec& axis, const char* name) {
  if (axis.steps < 1) {
    throw std::invalid_argument(std::string(name) + " axis needs steps >= 1");
  }
  if (!std::isfinite(axis.min) || !std::isfinite(axis.max) || axis.max < axis.min) {
    throw std::invalid_argument(std::string(name) + " axis range is invalid");
  }
}

void validate_config(const SweepConfig& cfg) {
  validate_axis(cfg.j_range, "J");
  validate_axis(cfg.t_range, "T");
  if (!(cfg.t_range.min > 0.0)) {
    throw std::invalid_argument("T axis must start above 0");
  }
  switch (cfg.channel.kind) {
    case NoiseKind::None:
      break;
    case NoiseKind::BitFlip:
      if (!(cfg.channel.p >= 0.0 && cfg.channel.p <= 1.0)) {
        throw std::invalid_argument("bit-flip p must lie in [0, 1]");
      }
      break;
    case NoiseKind::Gad:
      if (!(cfg.channel.gamma >= 0.0 && cfg.channel.gamma <= 1.0)) {
        throw std::invalid_argument("GAD gamma must lie in [0, 1]");
      }
      if (std::abs(cfg.channel.p - 0.5) > 1e-12) {
        throw std::invalid_argument("GAD sweeps require p = 1/2 (Bell-diagonal form)");
      }
      break;
  }
  if (!cfg.measures.qd && !cfg.measures.gqd1 && !cfg.measures.concurrence) {
    throw std::invalid_argument("at least one measure must be selected");
  }
}

std::optional<ChannelSpec> make_channel(const NoiseSetting& setting) {
  switch (setting.kind) {
    case NoiseKind::None:
      return std::nullopt;
    case NoiseKind::BitFlip:
      return kraus_bf(setting.p);
    case NoiseKind::Gad:
      return kraus_gad(setting.p, setting.gamma);
  }
  return std::nullopt;
}

std::string format_cell(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

SweepRecord evaluate_point(double J, double T, const SweepConfig& cfg,
                           const std::optional<ChannelSpec>& channel,
                           const OptimizerConfig& optimizer) {
  const ThermalState thermal = thermal_xxx(J, T);

  SweepRecord record;
  record.J = J;
  record.T = T;
  record.alpha = thermal.alpha;
  record.p = cfg.channel.kind == NoiseKind::None ? 0.0 : cfg.channel.p;
  record.gamma = cfg.channel.kind == NoiseKind::Gad ? cfg.channel.gamma : 0.0;

  BellDiagonalCoeffs evolved = thermal.coeffs;
  if (channel) {
    evolved = evolve_coeffs(thermal.coeffs, *channel);
  }
  record.c1 = evolved.c1;
  record.c2 = evolved.c2;
  record.c3 = evolved.c3;

  const bool need_rho = cfg.measures.concurrence || cfg.oracle_mode;
  ComplexMatrix rho;
  if (need_rho) {
    rho = channel ? apply_channel(thermal.rho, *channel) : thermal.rho;
  }

  if (cfg.measures.qd) {
    record.qd = qd_bds(evolved);
  }
  if (cfg.measures.gqd1) {
    record.gqd1 = gqd1_bds(evolved);
  }
  if (cfg.measures.concurrence) {
    record.concurrence = concurrence(rho);
  }
  if (cfg.oracle_mode) {
    if (cfg.measures.qd) {
      record.qd_numeric = qd_numeric(rho, optimizer);
    }
    if (cfg.measures.gqd1) {
      record.gqd1_numeric = gqd1_numeric(rho, optimizer);
    }
  }
  return record;
}

}  // namespace

std::vector<std::string> csv_header(const SweepConfig& cfg) {
  std::vector<std::string> header{"J", "T", "alpha", "p", "gamma", "c1", "c2", "c3"};
  if (cfg.measures.qd) {
    header.emplace_back("qd");
  }
  if (cfg.measures.gqd1) {
    header.emplace_back("gqd1");
  }
  if (cfg.measures.concurrence) {
    header.emplace_back("concurrence");
  }
  if (cfg.oracle_mode) {
    if (cfg.measures.qd) {
      header.emplace_back("qd_numeric");
    }
    if (cfg.measures.gqd1) {
      header.emplace_back("gqd1_numeric");
    }
  }
  return header;
}

void write_sweep_csv(const fs::path& path, const SweepConfig& cfg,
                     const std::vector<SweepRecord>& rows) {
  const fs::path parent = path.parent_path();
  std::error_code ec;
  if (!parent.empty()) {
    fs::create_directories(parent, ec);
    if (ec) {
      throw std::runtime_error("cannot create directory " + parent.string() + ": " + ec.message());
    }
  }

  // Write to a sibling temp file first, then rename into place.
  const fs::path temp = path.string() + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + temp.string() + " for writing");
    }
    const auto header = csv_header(cfg);
    for (std::size_t i = 0; i < header.size(); ++i) {
      out << (i ? "," : "") << header[i];
    }
    out << '\n';
    for (const SweepRecord& r : rows) {
      out << format_cell(r.J) << ',' << format_cell(r.T) << ',' << format_cell(r.alpha) << ','
          << format_cell(r.p) << ',' << format_cell(r.gamma) << ',' << format_cell(r.c1) << ','
          << format_cell(r.c2) << ',' << format_cell(r.c3);
      if (cfg.measures.qd) {
        out << ',' << format_cell(*r.qd);
      }
      if (cfg.measures.gqd1) {
        out << ',' << format_cell(*r.gqd1);
      }
      if (cfg.measures.concurrence) {
        out << ',' << format_cell(*r.concurrence);
      }
      if (cfg.oracle_mode) {
        if (cfg.measures.qd) {
          out << ',' << format_cell(*r.qd_numeric);
        }
        if (cfg.measures.gqd1) {
          out << ',' << format_cell(*r.gqd1_numeric);
        }
      }
      out << '\n';
    }
    out.flush();
    if (!out) {
      fs::remove(temp, ec);
      throw std::runtime_error("failed while writing " + temp.string());
    }
  }
  fs::rename(temp, path, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw std::runtime_error("cannot rename into " + path.string() + ": " + ec.message());
  }
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  validate_config(cfg);

  const std::optional<ChannelSpec> channel = make_channel(cfg.channel);
  OptimizerConfig optimizer;
  optimizer.seed = cfg.seed;

  std::vector<SweepRecord> rows;
  const std::vector<double> js = axis_values(cfg.j_range);
  const std::vector<double> ts = axis_values(cfg.t_range);
  rows.reserve(js.size() * ts.size());
  for (double J : js) {
    for (double T : ts) {
      rows.push_back(evaluate_point(J, T, cfg, channel, optimizer));
    }
  }

  std::stable_sort(rows.begin(), rows.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return a.J != b.J ? a.J < b.J : a.T < b.T;
  });

  if (!cfg.output_path.empty()) {
    write_sweep_csv(cfg.output_path, cfg, rows);
  }
  return rows;
}

namespace {

constexpr AxisSpec kSurfaceJ{-4.0, 4.0, 81};
constexpr AxisSpec kSurfaceT{0.1, 3.0, 59};
constexpr AxisSpec kSliceJ{-4.0, 4.0, 161};
constexpr AxisSpec kSliceTemps{0.5, 2.0, 4};  // {0.5, 1.0, 1.5, 2.0}
constexpr AxisSpec kUnitT{1.0, 1.0, 1};
constexpr AxisSpec kCurveJ{1.0, 4.0, 4};  // {1, 2, 3, 4}
constexpr AxisSpec kCurveT{0.05, 3.0, 60};

FigureFile emit(SweepConfig cfg, const fs::path& out_dir, const std::string& filename) {
  cfg.output_path = out_dir / filename;
  FigureFile file;
  file.path = cfg.output_path;
  file.rows = run_sweep(cfg);
  return file;
}

}  // namespace

std::vector<FigureFile> figure_dataset(int fig_id, const fs::path& out_dir,
                                       const FigureGrid& grid) {
  if (fig_id < 1 || fig_id > 8) {
    throw OutOfRangeError("figure_dataset: figure id must be in 1..8");
  }

  const AxisSpec surface_j = grid.j_range.value_or(kSurfaceJ);
  const AxisSpec surface_t = grid.t_range.value_or(kSurfaceT);
  const AxisSpec slice_j = grid.j_range.value_or(kSliceJ);
  const AxisSpec curve_t = grid.t_range.value_or(kCurveT);

  std::vector<FigureFile> files;
  SweepConfig cfg;

  switch (fig_id) {
    case 1:
    case 2: {
      const bool is_qd = fig_id == 1;
      cfg.measures = {is_qd, !is_qd, false};
      const std::string tag = is_qd ? "qd" : "gqd1";
      cfg.j_range = surface_j;
      cfg.t_range = surface_t;
      files.push_back(emit(cfg, out_dir, "fig" + std::to_string(fig_id) + "_" + tag + "_surface.csv"));
      cfg.j_range = slice_j;
      cfg.t_range = kSliceTemps;
      files.push_back(emit(cfg, out_dir, "fig" + std::to_string(fig_id) + "_" + tag + "_vs_j.csv"));
      break;
    }
    case 3: {
      cfg.measures = {false, false, true};
      cfg.j_range = kCurveJ;
      cfg.t_range = curve_t;
      files.push_back(emit(cfg, out_dir, "fig3_concurrence_vs_t.csv"));
      cfg.j_range = slice_j;
      cfg.t_range = kSliceTemps;
      files.push_back(emit(cfg, out_dir, "fig3_concurrence_vs_j.csv"));
      break;
    }
    case 4: {
      cfg.j_range = slice_j;
      cfg.t_range = kUnitT;
      files.push_back(emit(cfg, out_dir, "fig4_measures_vs_j_t1.csv"));
      break;
    }
    case 5: {
      cfg.channel = {NoiseKind::BitFlip, 0.5, 0.0};
      cfg.j_range = surface_j;
      cfg.t_range = surface_t;
      files.push_back(emit(cfg, out_dir, "fig5_bf_surface.csv"));
      break;
    }
    case 6: {
      cfg.channel = {NoiseKind::BitFlip, 0.5, 0.0};
      cfg.j_range = slice_j;
      cfg.t_range = kUnitT;
      files.push_back(emit(cfg, out_dir, "fig6_bf_vs_j_t1.csv"));
      break;
    }
    case 7: {
      cfg.channel = {NoiseKind::Gad, 0.5, 0.5};
      cfg.j_range = surface_j;
      cfg.t_range = surface_t;
      files.push_back(emit(cfg, out_dir, "fig7_gad_surface.csv"));
      break;
    }
    case 8: {
      cfg.channel = {NoiseKind::Gad, 0.5, 0.5};
      cfg.j_range = slice_j;
      cfg.t_range = kUnitT;
      files.push_back(emit(cfg, out_dir, "fig8_gad_vs_j_t1.csv"));
      break;
    }
    default:
      break;
  }
  return files;
}

double sudden_death_temperature(double J, const NoiseSetting& channel) {
  if (!std::isfinite(J) || !(J > 0.0)) {
    throw OutOfRangeError("sudden_death_temperature: J must be finite and > 0");
  }
  const std::optional<ChannelSpec> spec = make_channel(channel);
  const auto concurrence_at = [&](double T) {
    const ThermalState thermal = thermal_xxx(J, T);
    return concurrence(spec ? apply_channel(thermal.rho, *spec) : thermal.rho);
  };

  constexpr double kAliveThreshold = 1e-10;
  double lo = 1e-6;
  if (concurrence_at(lo) <= kAliveThreshold) {
    throw NoEntanglementError("sudden_death_temperature: concurrence already zero as T -> 0");
  }
  double hi = std::max(1.0, 2.0 * J);
  int doublings = 0;
  while (concurrence_at(hi) > kAliveThreshold) {
    hi *= 2.0;
    if (++doublings > 60) {
      throw std::runtime_error("sudden_death_temperature: no zero crossing found");
    }
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (concurrence_at(mid) > kAliveThreshold) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;  // concurrence(hi) <= 1e-10, bracket width < 1e-9
}

int ordering_sign(double diff) {
  if (std::abs(diff) < 1e-9) {
    return 0;
  }
  return diff > 0.0 ? 1 : -1;
}

OrderingReport ordering_report(const SweepConfig& cfg) {
  if (!cfg.measures.qd || !cfg.measures.gqd1) {
    throw std::invalid_argument("ordering_report requires both qd and gqd1");
  }
  SweepConfig compute_cfg = cfg;
  compute_cfg.output_path.clear();

  OrderingReport report;
  report.rows = run_sweep(compute_cfg);
  report.min_diff = std::numeric_limits<double>::infinity();
  report.max_diff = -std::numeric_limits<double>::infinity();

  for (const SweepRecord& row : report.rows) {
    const double diff = *row.gqd1 - *row.qd;
    report.min_diff = std::min(report.min_diff, diff);
    report.max_diff = std::max(report.max_diff, diff);
    switch (ordering_sign(diff)) {
      case 1:
        ++report.n_positive;
        break;
      case -1:
        ++report.n_negative;
        break;
      default:
        ++report.n_zero;
        break;
    }
  }

  // Crossing loci: scan each fixed-T row of the (J-major) grid for a change
  // between nonzero signs.
  const std::size_t n_t = axis_values(cfg.t_range).size();
  const std::size_t n_j = axis_values(cfg.j_range).size();
  for (std::size_t it = 0; it < n_t; ++it) {
    int last_sign = 0;
    double last_j = 0.0;
    for (std::size_t ij = 0; ij < n_j; ++ij) {
      const SweepRecord& row = report.rows[ij * n_t + it];
      const int sign = ordering_sign(*row.gqd1 - *row.qd);
      if (sign != 0) {
        if (last_sign != 0 && sign != last_sign) {
          report.crossings.push_back({row.T, last_j, row.J});
        }
        last_sign = sign;
        last_j = row.J;
      }
    }
  }

  const bool has_pos = report.n_positive > 0;
  const bool has_neg = report.n_negative > 0;
  if (has_pos && has_neg) {
    report.verdict = "ordering violated: both gqd1 > qd and qd > gqd1 occur";
  } else if (has_pos) {
    report.verdict = "ordering preserved: gqd1 >= qd on the whole grid";
  } else if (has_neg) {
    report.verdict = "ordering preserved: qd >= gqd1 on the whole grid";
  } else {
    report.verdict = "degenerate: gqd1 == qd on the whole grid (within the zero band)";
  }

  if (!cfg.output_path.empty()) {
    const fs::path parent = cfg.output_path.parent_path();
    std::error_code ec;
    if (!parent.empty()) {
      fs::create_directories(parent, ec);
    }
    const fs::path temp = cfg.output_path.string() + ".tmp";
    {
      std::ofstream out(temp, std::ios::binary | std::ios::trunc);
      if (!out) {
        throw std::runtime_error("cannot open " + temp.string() + " for writing");
      }
      out << "J,T,qd,gqd1,diff,sign\n";
      for (const SweepRecord& row : report.rows) {
        const double diff = *row.gqd1 - *row.qd;
        out << format_cell(row.J) << ',' << format_cell(row.T) << ',' << format_cell(*row.qd)
            << ',' << format_cell(*row.gqd1) << ',' << format_cell(diff) << ','
            << ordering_sign(diff) << '\n';
      }
      out.flush();
      if (!out) {
        fs::remove(temp, ec);
        throw std::runtime_error("failed while writing " + temp.string());
      }
    }
    fs::rename(temp, cfg.output_path, ec);
    if (ec) {
      fs::remove(temp, ec);
      throw std::runtime_error("cannot rename into " + cfg.output_path.string() + ": " +
                               ec.message());
    }
  }
  return report;
}

std::string format_ordering_report(const OrderingReport& report) {
  const double total = static_cast<double>(report.rows.size());
  std::ostringstream out;
  out << "ordering report over " << report.rows.size() << " grid points (diff = gqd1 - qd)\n";
  const auto line = [&](const char* label, std::size_t count) {
    out << "  " << label << ": " << count << " (" << format_cell(100.0 * count / total) << "%)\n";
  };
  line("gqd1 > qd", report.n_positive);
  line("|diff| <= 1e-9", report.n_zero);
  line("qd > gqd1", report.n_negative);
  out << "  diff range: [" << format_cell(report.min_diff) << ", " << format_cell(report.max_diff)
      << "]\n";
  if (report.crossings.empty()) {
    out << "  crossings: none\n";
  } else {
    for (const OrderingCrossing& c : report.crossings) {
      out << "  crossing at T = " << format_cell(c.T) << ", J in (" << format_cell(c.j_lo) << ", "
          << format_cell(c.j_hi) << ")\n";
    }
  }
  out << "  verdict: " << report.verdict << "\n";
  return out.str();
}

}  // namespace qcorr
