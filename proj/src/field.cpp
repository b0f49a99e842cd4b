#include "anisogpe/field.hpp"

#include <cmath>
#include <stdexcept>

#include "anisogpe/errors.hpp"

namespace anisogpe {

std::string to_string(Representation r) {
    switch (r) {
        case Representation::physical: return "physical";
        case Representation::spectral_x: return "spectral_x";
        case Representation::spectral_z: return "spectral_z";
        case Representation::spectral_xz: return "spectral_xz";
    }
    return "unknown";
}

WaveField::WaveField(GridPtr grid, Representation rep) : grid_(std::move(grid)), rep_(rep) {
    if (!grid_) throw std::invalid_argument("WaveField: null grid");
    data_.assign(grid_->size(), cplx{});
}

WaveField::WaveField(GridPtr grid, Representation rep, std::vector<cplx> data)
    : grid_(std::move(grid)), rep_(rep), data_(std::move(data)) {
    if (!grid_) throw std::invalid_argument("WaveField: null grid");
    if (data_.size() != grid_->size()) throw GridMismatch("WaveField: data size does not match grid");
}

void WaveField::to(Representation target) {
    const auto& eng = grid_->transforms();
    if (x_spectral(rep_) != x_spectral(target)) {
        for (int a = 0; a < 2; ++a) {
            if (x_spectral(target))
                eng.to_spectral(data_, a);
            else
                eng.to_nodal(data_, a);
        }
    }
    if (z_spectral(rep_) != z_spectral(target)) {
        if (z_spectral(target))
            eng.to_spectral(data_, 2);
        else
            eng.to_nodal(data_, 2);
    }
    rep_ = target;
}

WaveField WaveField::converted(Representation target) const {
    WaveField out = *this;
    out.to(target);
    return out;
}

std::vector<double> measure(const Grid3D& grid, Representation rep) {
    const auto d = grid.dims();
    std::array<std::vector<double>, 3> w;
    for (int a = 0; a < 3; ++a) {
        const Axis& ax = grid.axis(a);
        const bool spectral = a < 2 ? x_spectral(rep) : z_spectral(rep);
        if (spectral)
            w[a].assign(ax.size(), ax.spectral_weight());
        else
            w[a] = ax.nodal_weights();
    }
    std::vector<double> out(grid.size());
    std::size_t k = 0;
    for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j) {
            const double wij = w[0][i] * w[1][j];
            for (int l = 0; l < d[2]; ++l) out[k++] = wij * w[2][l];
        }
    return out;
}

double mass(const WaveField& f) {
    const auto w = measure(f.grid(), f.representation());
    double s = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) s += w[k] * std::norm(f.data()[k]);
    return s;
}

double norm_L2(const WaveField& f) { return std::sqrt(mass(f)); }

cplx inner(const WaveField& f, const WaveField& g) {
    if (!f.grid().same_layout(g.grid())) throw GridMismatch("inner: fields live on different grids");
    const WaveField* gp = &g;
    WaveField tmp;
    if (g.representation() != f.representation()) {
        tmp = g.converted(f.representation());
        gp = &tmp;
    }
    const auto w = measure(f.grid(), f.representation());
    cplx s{};
    for (std::size_t k = 0; k < f.size(); ++k) s += w[k] * f.data()[k] * std::conj(gp->data()[k]);
    return s;
}

namespace {

// Sum of 1D oscillators -d^2/2 + x^2/2 over the chosen axes, evaluated from
// the physical representation.
WaveField axis_oscillator(const WaveField& f, const std::array<bool, 3>& use) {
    const Grid3D& grid = f.grid();
    const auto& eng = grid.transforms();
    const auto d = grid.dims();
    WaveField phys = f.converted(Representation::physical);
    WaveField out(f.grid_ptr(), Representation::physical);
    for (int a = 0; a < 3; ++a) {
        if (!use[a]) continue;
        const Axis& ax = grid.axis(a);
        if (ax.kind() == AxisKind::singleton) continue;
        std::vector<cplx> g = phys.data();
        if (ax.kind() == AxisKind::hermite) {
            eng.to_spectral(g, a);
            for (int i = 0; i < d[0]; ++i)
                for (int j = 0; j < d[1]; ++j)
                    for (int l = 0; l < d[2]; ++l) {
                        const int idx = a == 0 ? i : (a == 1 ? j : l);
                        g[grid.index(i, j, l)] *= idx + 0.5;
                    }
            eng.to_nodal(g, a);
        } else {
            eng.fft(g, a, -1);
            const auto& k = ax.wavenumbers();
            const double inv_n = 1.0 / ax.size();
            for (int i = 0; i < d[0]; ++i)
                for (int j = 0; j < d[1]; ++j)
                    for (int l = 0; l < d[2]; ++l) {
                        const int idx = a == 0 ? i : (a == 1 ? j : l);
                        g[grid.index(i, j, l)] *= 0.5 * k[idx] * k[idx] * inv_n;
                    }
            eng.fft(g, a, +1);
            const auto& x = ax.coordinates();
            for (int i = 0; i < d[0]; ++i)
                for (int j = 0; j < d[1]; ++j)
                    for (int l = 0; l < d[2]; ++l) {
                        const int idx = a == 0 ? i : (a == 1 ? j : l);
                        const std::size_t q = grid.index(i, j, l);
                        g[q] += 0.5 * x[idx] * x[idx] * phys.data()[q];
                    }
        }
        for (std::size_t q = 0; q < g.size(); ++q) out.data()[q] += g[q];
    }
    out.to(f.representation());
    return out;
}

std::array<bool, 3> confining_axes(const Grid3D& grid) {
    switch (grid.confinement()) {
        case Confinement::z_confined: return {false, false, true};
        case Confinement::x_confined: return {true, true, false};
        default: return {false, false, false};
    }
}

}  // namespace

WaveField apply_confining_oscillator(const WaveField& f) { return axis_oscillator(f, confining_axes(f.grid())); }

WaveField apply_free_oscillator(const WaveField& f) {
    auto c = confining_axes(f.grid());
    return axis_oscillator(f, {!c[0], !c[1], !c[2]});
}

SigmaNorms sigma_norms(const WaveField& f) {
    const WaveField hc = apply_confining_oscillator(f);
    const WaveField hf = apply_free_oscillator(f);
    const double m = mass(f);
    const double s1 = inner(hc, f).real() + inner(hf, f).real() + m;
    const double s2 = mass(hc) + mass(hf) + m;
    return {std::sqrt(std::max(s1, 0.0)), std::sqrt(s2)};
}

WaveField gauge_transform(const WaveField& psi, double epsilon, const Omega& omega, GaugeDirection direction,
                          Confinement confinement) {
    if (psi.representation() != Representation::physical)
        throw RepresentationError("gauge_transform: field must be in the physical representation");
    const Grid3D& grid = psi.grid();
    const auto d = grid.dims();
    const auto& x1 = grid.x1().coordinates();
    const auto& x2 = grid.x2().coordinates();
    const auto& z = grid.z().coordinates();
    // to_psi multiplies by exp(+i eps z a(x)); to_u by its conjugate.
    const double sign = direction == GaugeDirection::to_psi ? 1.0 : -1.0;
    const double flip = confinement == Confinement::x_confined ? -1.0 : 1.0;
    WaveField out = psi;
    for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j) {
            const double a = flip * (omega.o1 * x2[j] - omega.o2 * x1[i]);
            for (int l = 0; l < d[2]; ++l) {
                const double angle = sign * epsilon * z[l] * a;
                out.at(i, j, l) *= cplx(std::cos(angle), std::sin(angle));
            }
        }
    return out;
}

WaveField apply_confinement_propagator(const WaveField& f, double tau) {
    const Grid3D& grid = f.grid();
    const auto d = grid.dims();
    WaveField out = f;
    switch (grid.confinement()) {
        case Confinement::z_confined: {
            out.to(make_representation(x_spectral(f.representation()), true));
            std::vector<cplx> phase(d[2]);
            for (int l = 0; l < d[2]; ++l) phase[l] = oscillator_phase(tau, l + 0.5);
            for (std::size_t p = 0; p < static_cast<std::size_t>(d[0]) * d[1]; ++p)
                for (int l = 0; l < d[2]; ++l) out.data()[p * d[2] + l] *= phase[l];
            break;
        }
        case Confinement::x_confined: {
            out.to(make_representation(true, z_spectral(f.representation())));
            for (int i = 0; i < d[0]; ++i)
                for (int j = 0; j < d[1]; ++j) {
                    const cplx ph = oscillator_phase(tau, i + j + 1.0);
                    for (int l = 0; l < d[2]; ++l) out.at(i, j, l) *= ph;
                }
            break;
        }
        default:
            throw Unsupported("apply_confinement_propagator: grid has no confined direction");
    }
    out.to(f.representation());
    return out;
}

double l2_distance_filtered(const WaveField& psi_eps, const WaveField& phi, double t, double epsilon) {
    if (!psi_eps.grid().same_layout(phi.grid())) throw GridMismatch("l2_distance_filtered: grid mismatch");
    if (!(epsilon > 0.0)) throw std::invalid_argument("l2_distance_filtered: epsilon must be positive");
    WaveField filtered = apply_confinement_propagator(phi, t / (epsilon * epsilon));
    filtered.to(psi_eps.representation());
    for (std::size_t k = 0; k < filtered.size(); ++k) filtered.data()[k] = psi_eps.data()[k] - filtered.data()[k];
    return norm_L2(filtered);
}

double boundary_mass(const WaveField& f) {
    const WaveField phys = f.converted(Representation::physical);
    const Grid3D& grid = f.grid();
    const auto d = grid.dims();
    const auto w = measure(grid, Representation::physical);
    auto outer = [&](int a, int idx) {
        const Axis& ax = grid.axis(a);
        return ax.kind() == AxisKind::fourier && std::abs(ax.coordinates()[idx]) > 0.9 * ax.half_length();
    };
    double s = 0.0;
    for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j)
            for (int l = 0; l < d[2]; ++l)
                if (outer(0, i) || outer(1, j) || outer(2, l)) {
                    const std::size_t q = grid.index(i, j, l);
                    s += w[q] * std::norm(phys.data()[q]);
                }
    return s;
}

}  // namespace anisogpe
