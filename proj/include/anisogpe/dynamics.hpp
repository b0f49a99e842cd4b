#pragma once

#include <memory>
#include <string>
#include <vector>

#include "anisogpe/field.hpp"

namespace anisogpe {

enum class Model : std::uint8_t {
    full_psi,            ///< rescaled 3D equation for psi (z strongly confined)
    gauged_u,            ///< the same after the gauge change of unknown
    limit3d_phi,         ///< averaged limit, F_av nonlinearity
    effective2d_varphi,  ///< 2D equation with coupling kappa_n
    full_psi_2dconf,     ///< rescaled 3D equation, x strongly confined
    limit_phi1d,         ///< averaged limit, G_av nonlinearity
    effective1d,         ///< 1D equation with coupling kappa_0
};

std::string to_string(Model m);
/// Throws std::invalid_argument for unknown names.
Model model_from_string(const std::string& name);

enum class SplitOrder : std::uint8_t { lie, strang };

struct GridSpec {
    int n1 = 128;
    int n2 = 128;
    double half_length1 = 12.0;
    double half_length2 = 12.0;
    int nz_modes = 32;  ///< Hermite modes in z (z-confined models)
    int nx_modes = 16;  ///< Hermite modes per transverse axis (x-confined models)
    int nz = 128;       ///< Fourier points in z (x-confined and 1D models)
    double half_length_z = 12.0;
};

struct SimParams {
    double epsilon = 0.1;
    Omega omega{};
    double lambda = 1.0;
    double sigma = 1.0;
    double dt = 1e-3;
    double t_final = 1.0;
    Model model = Model::full_psi;
    SplitOrder order = SplitOrder::strang;
    GridSpec grid{};
    int n_theta = 0;  ///< 0: 4 * modes per confined axis
    int band = 0;     ///< band index n of the 2D effective model

    /// Throws ConfigError naming the offending key.
    void validate() const;
};

/// Grid matching the model family of `params`.
GridPtr make_grid(const SimParams& params);

/// Initial data on `grid`: a normalized Gaussian in the free variables times the
/// oscillator eigenfunction `band` in the confined ones (z-confined grids), or
/// times the 2D ground state (x-confined grids). Returned in the physical
/// representation.
struct InitSpec {
    int band = 0;
    double width = 1.0;
    double shift1 = 0.0;
    double shift2 = 0.0;
    double shift_z = 0.0;
};
WaveField make_initial_state(const GridPtr& grid, const InitSpec& init);

enum class SubstepOp : std::uint8_t {
    z_oscillator,   ///< exp(-i tau H_z / eps^2), exact
    x_levels,       ///< exp(-i tau (H_x / eps^2 - Omega_z L_z)) per level block, exact
    rotation,       ///< exp(i tau Omega_z L_z) per level block
    x1_adi,         ///< Fourier multiplier along x1
    x2_adi,         ///< Fourier multiplier along x2
    z_kinetic,      ///< Fourier multiplier along z
    potential,      ///< linear pointwise phase
    pointwise,      ///< potential plus local nonlinearity, exact phase
    nonlinear_rk2,  ///< i d/dt f = lambda * average(f), explicit midpoint
};

std::string to_string(SubstepOp op);

struct Substep {
    SubstepOp op;
    Representation rep;  ///< representation the substep works in
    double coeff;        ///< fraction of dt
};

struct SplitStepPlan {
    SplitOrder order = SplitOrder::strang;
    std::vector<Substep> substeps;
};

/// Substep sequence of a model. Full psi models share the plan of the gauged
/// equation; the gauge is applied around it.
SplitStepPlan build_plan(Model model, SplitOrder order);

/// Coefficient multiplying |f|^{2 sigma} f in the pointwise substep of the
/// effective models (kappa_n or kappa_0) or lambda otherwise.
double local_coupling(const SimParams& params);

/// Coefficient of z^2 in the potential of the x-confined limit and 1D models,
/// (1 - O1^2 - O2^2) / 2.
double z_potential_coefficient(const Omega& omega);

class Stepper {
public:
    Stepper(GridPtr grid, const SimParams& params);
    ~Stepper();
    Stepper(const Stepper&) = delete;
    Stepper& operator=(const Stepper&) = delete;

    const SplitStepPlan& plan() const noexcept;
    const SimParams& params() const noexcept;
    const GridPtr& grid() const noexcept;
    const std::vector<std::string>& warnings() const noexcept;

    /// One step of size dt. Full psi models are gauged to u and back around the step.
    void step(WaveField& f) const;
    /// n steps; full psi models are gauged once at either end.
    void advance(WaveField& f, int n_steps) const;
    /// n steps of the gauged equation; no gauge change is applied.
    void advance_gauged(WaveField& u, int n_steps) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

WaveField step_u(const WaveField& u, const SimParams& params);
WaveField step_psi(const WaveField& psi, const SimParams& params);
WaveField step_phi_limit3d(const WaveField& phi, const SimParams& params);
WaveField step_varphi_2d(const WaveField& varphi, const SimParams& params, int band);
WaveField step_u_2dconf(const WaveField& u, const SimParams& params);
WaveField step_psi_2dconf(const WaveField& psi, const SimParams& params);
WaveField step_phi1d_limit(const WaveField& phi, const SimParams& params);
WaveField step_1d(const WaveField& varphi, const SimParams& params);

}  // namespace anisogpe
