#pragma once

#include <string>
#include <vector>

#include "anisogpe/dynamics.hpp"

namespace anisogpe {

struct OrderFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;  ///< largest |log err - fit| (natural log)
};

/// Least squares on (log eps, log err). Needs at least 3 positive pairs.
OrderFit fit_order(const std::vector<double>& epsilons, const std::vector<double>& errors);

/// One message per place where the error grows as eps decreases.
std::vector<std::string> monotonicity_flags(const std::vector<double>& epsilons, const std::vector<double>& errors);

struct ConvergenceSettings {
    std::vector<double> epsilons{0.2, 0.1, 0.05, 0.025};
    bool corrected_data = false;
    double sample_interval = 0.05;
    double limit_dt = 0.0;  ///< 0: use params.dt
    InitSpec init{};
};

struct ConvergenceReport {
    std::vector<double> epsilons;
    std::vector<double> errors;                     ///< max over samples
    std::vector<std::vector<double>> error_series;  ///< per eps, per sample
    std::vector<double> sample_times;
    std::vector<double> runtimes;                   ///< seconds per eps
    double limit_runtime = 0.0;                     ///< shared limit solve (plain data)
    double total_runtime = 0.0;
    OrderFit fit{};
    bool corrected_data = false;
    bool flagged = false;
    std::vector<std::string> flags;
    std::vector<std::string> warnings;
    double dt = 0.0;
    double limit_dt = 0.0;
    std::string fingerprint;
};

/// Runs the full model for each eps against the averaged limit and records
/// max_t || psi^eps - e^{i eps z (O1 x2 - O2 x1)} e^{-i t H_z / eps^2} phi ||
/// (the gauge factor only with corrected data, where phi is re-solved per eps
/// from the gauged initial data). The model field of `params` is ignored.
/// Throws ConfigError when dt^2 >= 0.01 * min eps or when the sample interval
/// is not a multiple of the time steps.
ConvergenceReport run_convergence(const SimParams& params, const ConvergenceSettings& settings,
                                  const std::string& fingerprint = "");

void write_report_json(const ConvergenceReport& report, const std::string& path);
/// Two columns: eps, error.
void write_plot_data(const ConvergenceReport& report, const std::string& path);

}  // namespace anisogpe
