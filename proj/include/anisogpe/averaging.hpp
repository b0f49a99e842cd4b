#pragma once

#include <vector>

#include "anisogpe/field.hpp"

namespace anisogpe {

struct AveragingConfig {
    /// Equispaced theta points on [0, 2 pi); 0 selects 4 * (modes per confined axis).
    int n_theta = 0;
    bool oracle_enabled = false;
    double sigma = 1.0;
};

/// Averaged nonlinearity of the stiff oscillator of a grid: F_av over H_z on
/// z-confined grids, G_av over H_x on x-confined grids. The nonlinearity is
/// evaluated on a Gauss-Hermite rule with twice the modes per axis, scaled to
/// the exp(-2 z^2) envelope, and projected back.
class AveragingEngine {
public:
    AveragingEngine(GridPtr grid, const AveragingConfig& config);
    ~AveragingEngine();
    AveragingEngine(const AveragingEngine&) = delete;
    AveragingEngine& operator=(const AveragingEngine&) = delete;

    int n_theta() const noexcept { return n_theta_; }
    double sigma() const noexcept { return sigma_; }
    /// Largest oscillator level (minus ground energy) present in the truncation.
    int max_level() const noexcept { return max_level_; }

    /// e^{i theta H}(|e^{-i theta H} u|^{2 sigma} e^{-i theta H} u), projected.
    WaveField oscillatory(double theta, const WaveField& u) const;
    /// Trapezoidal theta-average of `oscillatory`.
    WaveField average(const WaveField& u) const;
    /// (1 / 2 pi) int_0^{2 pi} int |e^{-i theta H} u|^{2 sigma + 2} d theta, same quadrature as `average`.
    double averaged_power(const WaveField& u) const;

private:
    template <class Body>
    void for_each_pencil(const WaveField& spectral, Body&& body) const;
    Representation work_representation() const;

    GridPtr grid_;
    double sigma_;
    int n_theta_;
    int n_modes_;   // modes per pencil
    int n_nodes_;   // quadrature points per pencil
    int max_level_;
    std::vector<int> level_;       // per mode
    std::vector<std::size_t> offset_;  // per mode, within a pencil
    std::vector<double> phi_;      // n_nodes x n_modes, row-major
    std::vector<double> omega_;    // quadrature weights
    void* plan_fwd_ = nullptr;
    void* plan_bwd_ = nullptr;
};

WaveField F_osc(double theta, const WaveField& u, double sigma = 1.0);
WaveField F_av(const WaveField& u, double sigma = 1.0, int n_theta = 0);
/// Same as F_av on an x-confined grid.
WaveField G_av(const WaveField& u, double sigma = 1.0, int n_theta = 0);

/// sigma = 1 only: sum over (m1, m2, m3) with m1 - m2 + m3 = n of
/// <chi_n chi_m1 chi_m2 chi_m3> c_m1 conj(c_m2) c_m3, overlaps taken from a fine
/// uniform trapezoid. z-confined grids only; throws Unsupported otherwise.
WaveField F_av_resonant_oracle(const WaveField& u);

}  // namespace anisogpe
