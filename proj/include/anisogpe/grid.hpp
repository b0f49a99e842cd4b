#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "anisogpe/hermite.hpp"

namespace anisogpe {

enum class AxisKind : std::uint8_t { fourier, hermite, singleton };

/// One tensor factor of a grid. Fourier axes are periodic on [-L, L) with n
/// equispaced points; Hermite axes carry n oscillator modes sampled on the n
/// Gauss-Hermite nodes (a square, orthogonal transform).
class Axis {
public:
    static Axis fourier(int n, double half_length);
    static Axis hermite(int n_modes);
    static Axis singleton();

    AxisKind kind() const noexcept { return kind_; }
    int size() const noexcept { return size_; }
    double half_length() const noexcept { return half_length_; }
    double spacing() const noexcept { return spacing_; }
    const HermiteBasis1D& basis() const;
    const std::shared_ptr<const HermiteBasis1D>& basis_ptr() const noexcept { return basis_; }

    /// Grid points, Hermite nodes, or {0}.
    const std::vector<double>& coordinates() const noexcept { return coords_; }
    /// Quadrature weights of the nodal representation.
    const std::vector<double>& nodal_weights() const noexcept { return nodal_weights_; }
    /// Quadrature weight of the spectral representation (h for Fourier, 1 otherwise).
    double spectral_weight() const noexcept { return kind_ == AxisKind::fourier ? spacing_ : 1.0; }
    /// Angular wavenumbers in FFTW ordering (Fourier axes only).
    const std::vector<double>& wavenumbers() const noexcept { return wavenumbers_; }

    bool operator==(const Axis& other) const noexcept;

private:
    AxisKind kind_ = AxisKind::singleton;
    int size_ = 1;
    double half_length_ = 0.0;
    double spacing_ = 1.0;
    std::shared_ptr<const HermiteBasis1D> basis_;
    std::vector<double> coords_;
    std::vector<double> nodal_weights_;
    std::vector<double> wavenumbers_;
};

/// Which variables the stiff oscillator acts on.
enum class Confinement : std::uint8_t {
    z_confined,  ///< Fourier x1, Fourier x2, Hermite z
    x_confined,  ///< Hermite x1, Hermite x2, Fourier z
    plane,       ///< Fourier x1, Fourier x2 (2D effective model)
    line,        ///< Fourier z (1D effective model)
};

class TransformEngine;

/// Tensor grid (x1, x2, z) with z the fastest-varying index. Owns the FFT plans
/// for its shape; immutable and safe to share across threads once built.
class Grid3D {
public:
    Grid3D(Axis x1, Axis x2, Axis z, Confinement confinement);
    ~Grid3D();
    Grid3D(const Grid3D&) = delete;
    Grid3D& operator=(const Grid3D&) = delete;

    const Axis& axis(int a) const { return axes_.at(a); }
    const Axis& x1() const noexcept { return axes_[0]; }
    const Axis& x2() const noexcept { return axes_[1]; }
    const Axis& z() const noexcept { return axes_[2]; }
    Confinement confinement() const noexcept { return confinement_; }

    std::array<int, 3> dims() const noexcept { return {axes_[0].size(), axes_[1].size(), axes_[2].size()}; }
    std::size_t size() const noexcept;
    std::size_t index(int i1, int i2, int i3) const noexcept {
        return (static_cast<std::size_t>(i1) * axes_[1].size() + i2) * axes_[2].size() + i3;
    }

    /// True when both grids describe the same discretization.
    bool same_layout(const Grid3D& other) const noexcept;

    const TransformEngine& transforms() const noexcept { return *engine_; }

private:
    std::array<Axis, 3> axes_;
    Confinement confinement_;
    std::unique_ptr<TransformEngine> engine_;
};

using GridPtr = std::shared_ptr<const Grid3D>;

GridPtr make_z_confined_grid(int n1, int n2, double half_length1, double half_length2, int nz_modes);
GridPtr make_x_confined_grid(int nx_modes, int nz, double half_length_z);
GridPtr make_plane_grid(int n1, int n2, double half_length1, double half_length2);
GridPtr make_line_grid(int nz, double half_length_z);

/// Axis-wise transforms on a flat (x1, x2, z) array. Fourier transforms here
/// are unnormalized FFTW transforms; the unitary variants divide by sqrt(n).
class TransformEngine {
public:
    explicit TransformEngine(const Grid3D& grid);
    ~TransformEngine();
    TransformEngine(const TransformEngine&) = delete;
    TransformEngine& operator=(const TransformEngine&) = delete;

    /// Unnormalized in-place FFT along a Fourier axis; sign = -1 forward, +1 backward.
    void fft(std::span<cplx> data, int axis, int sign) const;
    /// Nodal -> spectral along one axis (unitary).
    void to_spectral(std::span<cplx> data, int axis) const;
    /// Spectral -> nodal along one axis (unitary).
    void to_nodal(std::span<cplx> data, int axis) const;

private:
    void hermite_apply(std::span<cplx> data, int axis, const std::vector<double>& row_major, int rows) const;

    const Grid3D& grid_;
    std::array<int, 3> dims_;
    std::array<void*, 3> forward_{};
    std::array<void*, 3> backward_{};
    std::array<std::vector<double>, 3> synthesis_;  // nodes x modes, row-major
};

}  // namespace anisogpe
