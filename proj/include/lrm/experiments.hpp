#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lrm/hedging.hpp"

namespace lrm {

enum class ExperimentKind {
  time_sweep,    // xi at the money as t runs over (0, T), T = 1
  strike_sweep,  // xi across strikes at t = 0, T = 1/2
};

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::strike_sweep;
  int model_id = 1;  // 1 = martingale drift, 2 = half-variance drift
  std::vector<double> M_values = {4.0, 16.0};
  double C = 1.0;
  double H = 0.5;
  double spot = 1.0;
};

struct ExperimentResult {
  std::vector<double> x;                 // t or K, row labels
  std::vector<std::vector<double>> xi;   // one column per M
  std::vector<std::string> warnings;
  std::filesystem::path csv_path;
  std::filesystem::path svg_path;
};

std::string experiment_basename(const ExperimentSpec& spec);

// Runs one panel, writes CSV (and optionally SVG) into out_dir, returns the
// curves. Damping failures abort with assumption_failure; boundary moment
// failures only add warnings.
ExperimentResult run_experiment(const ExperimentSpec& spec,
                                const TransformGrid& grid,
                                const std::filesystem::path& out_dir,
                                bool write_svg = true,
                                Exec exec = Exec::serial);

}  // namespace lrm
