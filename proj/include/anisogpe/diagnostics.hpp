#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "anisogpe/dynamics.hpp"
#include "anisogpe/oscillator2d.hpp"

namespace anisogpe {

struct EnergyTerms {
    double kinetic = 0.0;     ///< 1/2 int |grad_free f|^2
    double potential = 0.0;   ///< pointwise potentials of the model
    double rotation = 0.0;    ///< -Omega_z <L_z f, f>
    double confining = 0.0;   ///< eps^-2 <H_conf f, f> (full models only)
    double mixed = 0.0;       ///< order-eps derivative coupling (full models only)
    double nonlinear = 0.0;
    double total() const noexcept { return kinetic + potential + rotation + confining + mixed + nonlinear; }
};

/// Hamiltonian of the model selected by params.model, term by term. For the
/// averaged limits the nonlinear term is lambda / (sigma + 1) times the
/// theta-averaged power, computed with the same quadrature as the averaged
/// nonlinearity.
EnergyTerms energy_terms(const WaveField& f, const SimParams& params);
double energy(const WaveField& f, const SimParams& params);
/// energy() with params.model forced to limit3d_phi.
double energy_phi(const WaveField& phi, const SimParams& params);

/// <H_conf f, f>: sum (n + 1/2)|c_n|^2 on z-confined grids, sum (n + 1)|c_alpha|^2
/// on x-confined grids. Throws Unsupported on plane and line grids.
double hz_expectation(const WaveField& f);

/// Mass per oscillator level of the confined variables (per z-mode or per
/// x-level); a single entry holding the mass on plane and line grids.
std::vector<double> band_populations(const WaveField& f);
/// Mass in each joint (H_x, L_z) state of `basis` (x-confined grids).
std::vector<double> joint_state_populations(const WaveField& f, const Oscillator2DBasis& basis);

struct PotentialAnalysis {
    std::array<double, 2> eigenvalues{};  ///< ascending
    bool confining = false;
};

/// Quadratic form 1/2 (1 - O2^2) x1^2 + 1/2 (1 - O1^2) x2^2 - O1 O2 x1 x2.
PotentialAnalysis effective_potential_analysis(const Omega& omega);

struct DiagnosticsRecord {
    double t = 0.0;
    double mass = 0.0;
    double energy = 0.0;
    double hz_expectation = 0.0;  ///< NaN on plane and line grids
    std::vector<double> band_populations;
    double boundary_mass = 0.0;
    std::vector<std::string> warnings;
};

DiagnosticsRecord make_record(const WaveField& f, double t, const SimParams& params);

/// CSV with a leading "# config_fingerprint" comment; the first eight band
/// populations are written (zero padded).
void write_csv_header(std::ostream& os, const std::string& fingerprint);
void write_csv_row(std::ostream& os, const DiagnosticsRecord& r);

}  // namespace anisogpe
