#include "anisogpe/grid.hpp"

#include <fftw3.h>

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anisogpe {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

using RowMatC = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowMatD = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace

Axis Axis::fourier(int n, double half_length) {
    if (!is_power_of_two(n)) throw std::invalid_argument("Fourier axis size must be a power of two");
    if (!(half_length > 0.0)) throw std::invalid_argument("Fourier axis half length must be positive");
    Axis a;
    a.kind_ = AxisKind::fourier;
    a.size_ = n;
    a.half_length_ = half_length;
    a.spacing_ = 2.0 * half_length / n;
    a.coords_.resize(n);
    a.wavenumbers_.resize(n);
    a.nodal_weights_.assign(n, a.spacing_);
    const double dk = std::numbers::pi / half_length;
    for (int j = 0; j < n; ++j) {
        a.coords_[j] = -half_length + j * a.spacing_;
        a.wavenumbers_[j] = dk * (j < n / 2 ? j : j - n);
    }
    return a;
}

Axis Axis::hermite(int n_modes) {
    Axis a;
    a.kind_ = AxisKind::hermite;
    a.size_ = n_modes;
    a.basis_ = std::make_shared<const HermiteBasis1D>(build_basis(n_modes, n_modes));
    a.coords_ = a.basis_->nodes();
    a.nodal_weights_ = a.basis_->weights();
    return a;
}

Axis Axis::singleton() {
    Axis a;
    a.coords_ = {0.0};
    a.nodal_weights_ = {1.0};
    return a;
}

const HermiteBasis1D& Axis::basis() const {
    if (!basis_) throw std::logic_error("Axis::basis: not a Hermite axis");
    return *basis_;
}

bool Axis::operator==(const Axis& other) const noexcept {
    return kind_ == other.kind_ && size_ == other.size_ && half_length_ == other.half_length_;
}

Grid3D::Grid3D(Axis x1, Axis x2, Axis z, Confinement confinement)
    : axes_{std::move(x1), std::move(x2), std::move(z)}, confinement_(confinement) {
    engine_ = std::make_unique<TransformEngine>(*this);
}

Grid3D::~Grid3D() = default;

std::size_t Grid3D::size() const noexcept {
    return static_cast<std::size_t>(axes_[0].size()) * axes_[1].size() * axes_[2].size();
}

bool Grid3D::same_layout(const Grid3D& other) const noexcept {
    return this == &other || (confinement_ == other.confinement_ && axes_ == other.axes_);
}

GridPtr make_z_confined_grid(int n1, int n2, double half_length1, double half_length2, int nz_modes) {
    return std::make_shared<const Grid3D>(Axis::fourier(n1, half_length1), Axis::fourier(n2, half_length2),
                                          Axis::hermite(nz_modes), Confinement::z_confined);
}

GridPtr make_x_confined_grid(int nx_modes, int nz, double half_length_z) {
    return std::make_shared<const Grid3D>(Axis::hermite(nx_modes), Axis::hermite(nx_modes),
                                          Axis::fourier(nz, half_length_z), Confinement::x_confined);
}

GridPtr make_plane_grid(int n1, int n2, double half_length1, double half_length2) {
    return std::make_shared<const Grid3D>(Axis::fourier(n1, half_length1), Axis::fourier(n2, half_length2),
                                          Axis::singleton(), Confinement::plane);
}

GridPtr make_line_grid(int nz, double half_length_z) {
    return std::make_shared<const Grid3D>(Axis::singleton(), Axis::singleton(), Axis::fourier(nz, half_length_z),
                                          Confinement::line);
}

TransformEngine::TransformEngine(const Grid3D& grid) : grid_(grid), dims_(grid.dims()) {
    const std::array<int, 3> strides{dims_[1] * dims_[2], dims_[2], 1};
    fftw_complex* scratch = nullptr;
    for (int a = 0; a < 3; ++a) {
        const Axis& ax = grid.axis(a);
        if (ax.kind() == AxisKind::hermite) {
            const auto& b = ax.basis();
            const int n = b.n_modes();
            synthesis_[a].resize(static_cast<std::size_t>(n) * n);
            for (int j = 0; j < n; ++j)
                for (int m = 0; m < n; ++m) synthesis_[a][static_cast<std::size_t>(j) * n + m] = b.chi(m, j);
        }
        if (ax.kind() != AxisKind::fourier) continue;
        if (!scratch) scratch = fftw_alloc_complex(grid.size());
        fftw_iodim dim{dims_[a], strides[a], strides[a]};
        fftw_iodim many[2];
        int k = 0;
        for (int b = 0; b < 3; ++b) {
            if (b == a) continue;
            many[k++] = fftw_iodim{dims_[b], strides[b], strides[b]};
        }
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        forward_[a] = fftw_plan_guru_dft(1, &dim, 2, many, scratch, scratch, FFTW_FORWARD, flags);
        backward_[a] = fftw_plan_guru_dft(1, &dim, 2, many, scratch, scratch, FFTW_BACKWARD, flags);
        if (!forward_[a] || !backward_[a]) throw std::runtime_error("TransformEngine: FFTW planning failed");
    }
    if (scratch) fftw_free(scratch);
}

TransformEngine::~TransformEngine() {
    for (int a = 0; a < 3; ++a) {
        if (forward_[a]) fftw_destroy_plan(static_cast<fftw_plan>(forward_[a]));
        if (backward_[a]) fftw_destroy_plan(static_cast<fftw_plan>(backward_[a]));
    }
}

void TransformEngine::fft(std::span<cplx> data, int axis, int sign) const {
    if (data.size() != grid_.size()) throw std::invalid_argument("TransformEngine::fft: size mismatch");
    void* plan = sign < 0 ? forward_.at(axis) : backward_.at(axis);
    if (!plan) throw std::logic_error("TransformEngine::fft: axis is not a Fourier axis");
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(static_cast<fftw_plan>(plan), p, p);
}

void TransformEngine::hermite_apply(std::span<cplx> data, int axis, const std::vector<double>& row_major,
                                    int rows) const {
    const int cols = dims_[axis];
    Eigen::Map<const RowMatD> mat(row_major.data(), rows, cols);
    if (axis == 2) {
        const Eigen::Index pencils = static_cast<Eigen::Index>(dims_[0]) * dims_[1];
        Eigen::Map<RowMatC> view(data.data(), pencils, cols);
        RowMatC out = view * mat.transpose();
        view = out;
    } else if (axis == 0) {
        const Eigen::Index rest = static_cast<Eigen::Index>(dims_[1]) * dims_[2];
        Eigen::Map<RowMatC> view(data.data(), cols, rest);
        RowMatC out = mat * view;
        view = out;
    } else {
        const std::size_t slab = static_cast<std::size_t>(dims_[1]) * dims_[2];
        for (int i = 0; i < dims_[0]; ++i) {
            Eigen::Map<RowMatC> view(data.data() + i * slab, cols, dims_[2]);
            RowMatC out = mat * view;
            view = out;
        }
    }
}

void TransformEngine::to_spectral(std::span<cplx> data, int axis) const {
    const Axis& ax = grid_.axis(axis);
    switch (ax.kind()) {
        case AxisKind::fourier: {
            fft(data, axis, -1);
            const double s = 1.0 / std::sqrt(static_cast<double>(ax.size()));
            for (auto& v : data) v *= s;
            break;
        }
        case AxisKind::hermite:
            hermite_apply(data, axis, ax.basis().analysis_table(), ax.size());
            break;
        case AxisKind::singleton:
            break;
    }
}

void TransformEngine::to_nodal(std::span<cplx> data, int axis) const {
    const Axis& ax = grid_.axis(axis);
    switch (ax.kind()) {
        case AxisKind::fourier: {
            fft(data, axis, +1);
            const double s = 1.0 / std::sqrt(static_cast<double>(ax.size()));
            for (auto& v : data) v *= s;
            break;
        }
        case AxisKind::hermite:
            hermite_apply(data, axis, synthesis_[axis], ax.size());
            break;
        case AxisKind::singleton:
            break;
    }
}

}  // namespace anisogpe
