#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anisogpe/grid.hpp"

namespace anisogpe {

/// Which tensor factors are held in their spectral form. "x" is the transverse
/// pair (axes 0 and 1), "z" the third axis. On a z-confined grid spectral_x
/// means Fourier-in-x and spectral_z means Hermite-in-z; on an x-confined
/// grid the roles of the two transforms are swapped.
enum class Representation : std::uint8_t {
    physical = 0,
    spectral_x = 1,
    spectral_z = 2,
    spectral_xz = 3,
};

constexpr bool x_spectral(Representation r) noexcept { return (static_cast<unsigned>(r) & 1u) != 0; }
constexpr bool z_spectral(Representation r) noexcept { return (static_cast<unsigned>(r) & 2u) != 0; }
constexpr Representation make_representation(bool x, bool z) noexcept {
    return static_cast<Representation>((x ? 1u : 0u) | (z ? 2u : 0u));
}
std::string to_string(Representation r);

/// Rotation vector (Omega_1, Omega_2, Omega_z).
struct Omega {
    double o1 = 0.0;
    double o2 = 0.0;
    double oz = 0.0;
};

class WaveField {
public:
    WaveField() = default;
    explicit WaveField(GridPtr grid, Representation rep = Representation::physical);
    WaveField(GridPtr grid, Representation rep, std::vector<cplx> data);

    const Grid3D& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const noexcept { return grid_; }
    Representation representation() const noexcept { return rep_; }

    std::vector<cplx>& data() noexcept { return data_; }
    const std::vector<cplx>& data() const noexcept { return data_; }
    std::size_t size() const noexcept { return data_.size(); }

    cplx& at(int i1, int i2, int i3) { return data_[grid_->index(i1, i2, i3)]; }
    const cplx& at(int i1, int i2, int i3) const { return data_[grid_->index(i1, i2, i3)]; }

    /// In-place change of representation (unitary).
    void to(Representation target);
    WaveField converted(Representation target) const;

    /// Overrides the representation tag without transforming the data.
    void retag(Representation rep) noexcept { rep_ = rep; }

private:
    GridPtr grid_;
    Representation rep_ = Representation::physical;
    std::vector<cplx> data_;
};

/// Quadrature weight of each flat index in representation `rep`.
std::vector<double> measure(const Grid3D& grid, Representation rep);

double norm_L2(const WaveField& f);
double mass(const WaveField& f);
/// Discrete L2 inner product  sum f conj(g) dV. `g` is converted to the
/// representation of `f` if needed. Throws GridMismatch for different grids.
cplx inner(const WaveField& f, const WaveField& g);

struct SigmaNorms {
    double sigma1 = 0.0;
    double sigma2 = 0.0;
};

/// sqrt(<H_z^s u, u> + <H_x^s u, u> + ||u||^2) for s = 1, 2 using spectral
/// multipliers: H_z diagonal (n + 1/2) on Hermite axes, and on Fourier axes
/// the transverse oscillator assembled from k^2/2 and x^2/2.
SigmaNorms sigma_norms(const WaveField& f);

/// H_z u (z-confined grids) or H_x u (x-confined grids): the stiff oscillator
/// in its diagonal representation.
WaveField apply_confining_oscillator(const WaveField& f);
/// The non-stiff oscillator of the transverse/free directions.
WaveField apply_free_oscillator(const WaveField& f);

enum class GaugeDirection : std::uint8_t { to_u, to_psi };

/// Pointwise multiplication by exp(-+ i eps z (O1 x2 - O2 x1)) (z_confined) or
/// exp(-+ i eps z (O2 x1 - O1 x2)) (x_confined); `to_u` removes the phase.
/// Requires the physical representation.
WaveField gauge_transform(const WaveField& psi, double epsilon, const Omega& omega, GaugeDirection direction,
                          Confinement confinement);

/// exp(-i tau H_conf) with H_conf the stiff oscillator of the grid (H_z on
/// z-confined grids, H_x on x-confined grids). Works in any representation;
/// the result is returned in the input representation.
WaveField apply_confinement_propagator(const WaveField& f, double tau);

/// || psi - exp(-i t H_conf / eps^2) phi ||_L2.
double l2_distance_filtered(const WaveField& psi_eps, const WaveField& phi, double t, double epsilon);

/// Mass in the outer 10% band of every Fourier axis.
double boundary_mass(const WaveField& f);

/// Binary dump: "GPEF", u32 version, u32 n1, n2, nz, u8 representation, then
/// interleaved little-endian (re, im) float64 in x1-major order.
void save_field(const WaveField& f, const std::string& path);
WaveField load_field(GridPtr grid, const std::string& path);

}  // namespace anisogpe
