#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "anisogpe/dynamics.hpp"
#include "anisogpe/harness.hpp"

namespace anisogpe {

/// Everything a batch run needs. Serialized as flat "section.key = value" lines.
struct RunConfig {
    SimParams params{};
    InitSpec init{};
    std::string scenario = "default";
    std::uint64_t seed = 0;
    int snapshot_stride = 0;       ///< steps between field dumps; 0 disables
    int diagnostics_stride = 100;  ///< steps between CSV rows
    std::string output_directory = "out";
    std::vector<double> epsilons{0.2, 0.1, 0.05, 0.025};
    bool corrected_data = false;
    double sample_interval = 0.05;
    double limit_dt = 0.0;

    /// SimParams checks plus the run-level fields. Throws ConfigError.
    void validate() const;
    ConvergenceSettings convergence_settings() const;
};

/// Named starting points: "default" (tilted rotation axis, the convergence
/// sweep) and "isotropic" (no rotation, polarized ground state).
RunConfig scenario_preset(const std::string& name);
std::vector<std::string> scenario_names();

/// Sets one key from its text form. Throws ConfigError naming the key.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// '#' starts a comment; blank lines are ignored. A "scenario" entry selects
/// the preset the remaining entries are applied on top of. Duplicate and
/// unknown keys are rejected.
RunConfig parse_config(std::istream& is);
RunConfig parse_config_string(const std::string& text);
RunConfig load_config(const std::string& path);

/// Every key, fixed order, doubles with 17 significant digits.
std::string serialize_config(const RunConfig& cfg);
std::vector<std::string> config_keys();

/// FNV-1a 64 of serialize_config, as 16 hex digits.
std::string config_fingerprint(const RunConfig& cfg);

}  // namespace anisogpe
