#include "anisogpe/averaging.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "anisogpe/errors.hpp"

namespace anisogpe {

namespace {

// Pencils whose coefficient mass falls below this are left at zero; their
// output is below 1e-36.
constexpr double kNegligiblePencil = 1e-24;

struct PencilLayout {
    std::size_t count = 0;
    std::size_t stride = 0;  // distance between consecutive pencil bases
    double weight = 1.0;     // measure of one pencil in the free variables
};

PencilLayout pencil_layout(const Grid3D& g) {
    const auto d = g.dims();
    if (g.confinement() == Confinement::z_confined)
        return {static_cast<std::size_t>(d[0]) * d[1], static_cast<std::size_t>(d[2]),
                g.x1().spacing() * g.x2().spacing()};
    return {static_cast<std::size_t>(d[2]), 1, g.z().spacing()};
}

inline cplx power_nl(cplx g, double sigma) {
    const double a = std::norm(g);
    return (sigma == 1.0 ? a : std::pow(a, sigma)) * g;
}

}  // namespace

AveragingEngine::AveragingEngine(GridPtr grid, const AveragingConfig& config)
    : grid_(std::move(grid)), sigma_(config.sigma) {
    if (!grid_) throw std::invalid_argument("AveragingEngine: null grid");
    if (!(sigma_ > 0.0)) throw std::invalid_argument("AveragingEngine: sigma must be positive");
    const Grid3D& g = *grid_;
    int per_axis = 0;
    if (g.confinement() == Confinement::z_confined)
        per_axis = g.z().size();
    else if (g.confinement() == Confinement::x_confined)
        per_axis = g.x1().size();
    else
        throw Unsupported("AveragingEngine: grid has no confined direction");

    const int q = 2 * per_axis;
    const GaussHermiteRule rule = gauss_hermite_rule(q);
    std::vector<double> s(q), w(q), table(static_cast<std::size_t>(q) * per_axis);
    for (int j = 0; j < q; ++j) {
        s[j] = rule.nodes[j] / std::numbers::sqrt2;
        w[j] = rule.weights[j] / std::numbers::sqrt2;
        hermite_functions(s[j], std::span<double>(table.data() + static_cast<std::size_t>(j) * per_axis, per_axis));
    }

    if (g.confinement() == Confinement::z_confined) {
        n_modes_ = per_axis;
        n_nodes_ = q;
        max_level_ = per_axis - 1;
        level_.resize(n_modes_);
        offset_.resize(n_modes_);
        for (int m = 0; m < n_modes_; ++m) {
            level_[m] = m;
            offset_[m] = m;
        }
        phi_ = table;
        omega_ = w;
    } else {
        const int nz = g.z().size();
        n_modes_ = per_axis * per_axis;
        n_nodes_ = q * q;
        max_level_ = 2 * per_axis - 2;
        level_.resize(n_modes_);
        offset_.resize(n_modes_);
        for (int a1 = 0; a1 < per_axis; ++a1)
            for (int a2 = 0; a2 < per_axis; ++a2) {
                const int k = a1 * per_axis + a2;
                level_[k] = a1 + a2;
                offset_[k] = static_cast<std::size_t>(k) * nz;
            }
        phi_.resize(static_cast<std::size_t>(n_nodes_) * n_modes_);
        omega_.resize(n_nodes_);
        for (int j1 = 0; j1 < q; ++j1)
            for (int j2 = 0; j2 < q; ++j2) {
                const int j = j1 * q + j2;
                omega_[j] = w[j1] * w[j2];
                for (int a1 = 0; a1 < per_axis; ++a1)
                    for (int a2 = 0; a2 < per_axis; ++a2)
                        phi_[static_cast<std::size_t>(j) * n_modes_ + a1 * per_axis + a2] =
                            table[static_cast<std::size_t>(j1) * per_axis + a1] *
                            table[static_cast<std::size_t>(j2) * per_axis + a2];
            }
    }

    n_theta_ = config.n_theta > 0 ? config.n_theta : 4 * per_axis;
    if (n_theta_ <= max_level_)
        throw std::invalid_argument("AveragingEngine: n_theta must exceed the largest oscillator level");

    std::vector<cplx> scratch(static_cast<std::size_t>(n_nodes_) * n_theta_);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    int n = n_theta_;
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    plan_fwd_ = fftw_plan_many_dft(1, &n, n_nodes_, p, nullptr, 1, n, p, nullptr, 1, n, FFTW_FORWARD, flags);
    plan_bwd_ = fftw_plan_many_dft(1, &n, n_nodes_, p, nullptr, 1, n, p, nullptr, 1, n, FFTW_BACKWARD, flags);
    if (!plan_fwd_ || !plan_bwd_) throw std::runtime_error("AveragingEngine: FFTW planning failed");
}

AveragingEngine::~AveragingEngine() {
    if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    if (plan_bwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

Representation AveragingEngine::work_representation() const {
    return grid_->confinement() == Confinement::z_confined ? Representation::spectral_z : Representation::spectral_x;
}

template <class Body>
void AveragingEngine::for_each_pencil(const WaveField& spectral, Body&& body) const {
    const PencilLayout lay = pencil_layout(*grid_);
    std::vector<cplx> c(n_modes_);
    for (std::size_t p = 0; p < lay.count; ++p) {
        const std::size_t base = p * lay.stride;
        double m = 0.0;
        for (int a = 0; a < n_modes_; ++a) {
            c[a] = spectral.data()[base + offset_[a]];
            m += std::norm(c[a]);
        }
        if (m < kNegligiblePencil) continue;
        body(base, c, lay.weight);
    }
}

WaveField AveragingEngine::oscillatory(double theta, const WaveField& u) const {
    if (!u.grid().same_layout(*grid_)) throw GridMismatch("AveragingEngine: grid mismatch");
    const WaveField us = u.converted(work_representation());
    WaveField out(us.grid_ptr(), us.representation());
    std::vector<cplx> ph(max_level_ + 1);
    for (int l = 0; l <= max_level_; ++l) ph[l] = oscillator_phase(theta, l);
    std::vector<cplx> gq(n_nodes_);
    for_each_pencil(us, [&](std::size_t base, const std::vector<cplx>& c, double) {
        for (int j = 0; j < n_nodes_; ++j) {
            const double* row = phi_.data() + static_cast<std::size_t>(j) * n_modes_;
            cplx acc{};
            for (int a = 0; a < n_modes_; ++a) acc += row[a] * (ph[level_[a]] * c[a]);
            gq[j] = omega_[j] * power_nl(acc, sigma_);
        }
        for (int a = 0; a < n_modes_; ++a) {
            cplx acc{};
            for (int j = 0; j < n_nodes_; ++j) acc += phi_[static_cast<std::size_t>(j) * n_modes_ + a] * gq[j];
            out.data()[base + offset_[a]] = std::conj(ph[level_[a]]) * acc;
        }
    });
    out.to(u.representation());
    return out;
}

WaveField AveragingEngine::average(const WaveField& u) const {
    if (!u.grid().same_layout(*grid_)) throw GridMismatch("AveragingEngine: grid mismatch");
    const WaveField us = u.converted(work_representation());
    WaveField out(us.grid_ptr(), us.representation());
    const int M = n_theta_;
    const double inv_m = 1.0 / M;
    std::vector<cplx> buf(static_cast<std::size_t>(n_nodes_) * M);
    auto* fb = reinterpret_cast<fftw_complex*>(buf.data());
    for_each_pencil(us, [&](std::size_t base, const std::vector<cplx>& c, double) {
        std::fill(buf.begin(), buf.end(), cplx{});
        for (int j = 0; j < n_nodes_; ++j) {
            const double* row = phi_.data() + static_cast<std::size_t>(j) * n_modes_;
            cplx* b = buf.data() + static_cast<std::size_t>(j) * M;
            for (int a = 0; a < n_modes_; ++a) b[level_[a]] += row[a] * c[a];
        }
        fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), fb, fb);
        for (auto& v : buf) v = power_nl(v, sigma_);
        fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_), fb, fb);
        for (int a = 0; a < n_modes_; ++a) {
            cplx acc{};
            for (int j = 0; j < n_nodes_; ++j)
                acc += (omega_[j] * phi_[static_cast<std::size_t>(j) * n_modes_ + a]) *
                       buf[static_cast<std::size_t>(j) * M + level_[a]];
            out.data()[base + offset_[a]] = acc * inv_m;
        }
    });
    out.to(u.representation());
    return out;
}

double AveragingEngine::averaged_power(const WaveField& u) const {
    if (!u.grid().same_layout(*grid_)) throw GridMismatch("AveragingEngine: grid mismatch");
    const WaveField us = u.converted(work_representation());
    const int M = n_theta_;
    std::vector<cplx> buf(static_cast<std::size_t>(n_nodes_) * M);
    auto* fb = reinterpret_cast<fftw_complex*>(buf.data());
    double total = 0.0;
    for_each_pencil(us, [&](std::size_t, const std::vector<cplx>& c, double weight) {
        std::fill(buf.begin(), buf.end(), cplx{});
        for (int j = 0; j < n_nodes_; ++j) {
            const double* row = phi_.data() + static_cast<std::size_t>(j) * n_modes_;
            cplx* b = buf.data() + static_cast<std::size_t>(j) * M;
            for (int a = 0; a < n_modes_; ++a) b[level_[a]] += row[a] * c[a];
        }
        fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), fb, fb);
        double s = 0.0;
        for (int j = 0; j < n_nodes_; ++j) {
            double sj = 0.0;
            for (int k = 0; k < M; ++k) sj += std::pow(std::norm(buf[static_cast<std::size_t>(j) * M + k]), sigma_ + 1.0);
            s += omega_[j] * sj;
        }
        total += weight * s / M;
    });
    return total;
}

WaveField F_osc(double theta, const WaveField& u, double sigma) {
    AveragingEngine e(u.grid_ptr(), {0, false, sigma});
    return e.oscillatory(theta, u);
}

WaveField F_av(const WaveField& u, double sigma, int n_theta) {
    if (u.grid().confinement() != Confinement::z_confined) throw Unsupported("F_av: requires a z-confined grid");
    AveragingEngine e(u.grid_ptr(), {n_theta, false, sigma});
    return e.average(u);
}

WaveField G_av(const WaveField& u, double sigma, int n_theta) {
    if (u.grid().confinement() != Confinement::x_confined) throw Unsupported("G_av: requires an x-confined grid");
    AveragingEngine e(u.grid_ptr(), {n_theta, false, sigma});
    return e.average(u);
}

namespace {

// <chi_n chi_a chi_b chi_c> on a uniform grid, h = 0.05 over [-20, 20].
const std::vector<double>& quartic_overlaps(int n_modes) {
    static std::mutex mu;
    static std::map<int, std::vector<double>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n_modes);
    if (it != cache.end()) return it->second;
    const double h = 0.05;
    const int npts = 801;
    std::vector<double> chi(static_cast<std::size_t>(npts) * n_modes);
    for (int k = 0; k < npts; ++k)
        hermite_functions(-20.0 + k * h, std::span<double>(chi.data() + static_cast<std::size_t>(k) * n_modes, n_modes));
    const std::size_t n = n_modes;
    std::vector<double> t(n * n * n * n, 0.0);
    std::vector<double> pair(npts);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            for (int k = 0; k < npts; ++k) pair[k] = chi[k * n + a] * chi[k * n + b];
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = c; d < n; ++d) {
                    double s = 0.0;
                    for (int k = 0; k < npts; ++k) s += pair[k] * chi[k * n + c] * chi[k * n + d];
                    s *= h;
                    const std::size_t idx[4] = {a, b, c, d};
                    // fill every permutation of the symmetric tensor
                    const int perm[24][4] = {{0,1,2,3},{0,1,3,2},{0,2,1,3},{0,2,3,1},{0,3,1,2},{0,3,2,1},
                                             {1,0,2,3},{1,0,3,2},{1,2,0,3},{1,2,3,0},{1,3,0,2},{1,3,2,0},
                                             {2,0,1,3},{2,0,3,1},{2,1,0,3},{2,1,3,0},{2,3,0,1},{2,3,1,0},
                                             {3,0,1,2},{3,0,2,1},{3,1,0,2},{3,1,2,0},{3,2,0,1},{3,2,1,0}};
                    for (const auto& p : perm)
                        t[((idx[p[0]] * n + idx[p[1]]) * n + idx[p[2]]) * n + idx[p[3]]] = s;
                }
        }
    return cache.emplace(n_modes, std::move(t)).first->second;
}

}  // namespace

WaveField F_av_resonant_oracle(const WaveField& u) {
    if (u.grid().confinement() != Confinement::z_confined)
        throw Unsupported("F_av_resonant_oracle: requires a z-confined grid");
    const int n = u.grid().z().size();
    const auto& t = quartic_overlaps(n);
    WaveField us = u.converted(Representation::spectral_z);
    WaveField out(us.grid_ptr(), Representation::spectral_z);
    const std::size_t pencils = us.size() / n;
    const std::size_t N = n;
    for (std::size_t p = 0; p < pencils; ++p) {
        const cplx* c = us.data().data() + p * N;
        cplx* o = out.data().data() + p * N;
        for (int k = 0; k < n; ++k) {
            cplx acc{};
            for (int m1 = 0; m1 < n; ++m1)
                for (int m2 = 0; m2 < n; ++m2) {
                    const int m3 = k - m1 + m2;
                    if (m3 < 0 || m3 >= n) continue;
                    acc += t[((k * N + m1) * N + m2) * N + m3] * c[m1] * std::conj(c[m2]) * c[m3];
                }
            o[k] = acc;
        }
    }
    out.to(u.representation());
    return out;
}

}  // namespace anisogpe
