#pragma once

#include <iosfwd>
#include <string>

#include "anisogpe/config.hpp"

namespace anisogpe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitResolution = 3;

/// Mass outside the box interior above this raises the resolution flag.
inline constexpr double kBoundaryMassLimit = 1e-6;

/// Integrates params.model to t_final. Writes diagnostics.csv and, with a
/// nonzero snapshot stride, snapshot_<step>.gpef into the output directory.
int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Writes converge_report.json and converge_plot.dat.
int cmd_converge(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Prints and writes kappa.csv (rows n, kappa_n) for n = 0..n_max.
int cmd_kappa(int n_max, double sigma, double lambda, const std::string& out_dir, std::ostream& out,
              std::ostream& err);
int cmd_diagnose(const Omega& omega, std::ostream& out);

/// ANISOGPE_OUTPUT_DIR, when set and non-empty, replaces output.directory.
void apply_environment(RunConfig& cfg);

}  // namespace anisogpe::cli
