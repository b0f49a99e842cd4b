#include "anisogpe/diagnostics.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "anisogpe/averaging.hpp"
#include "anisogpe/errors.hpp"

namespace anisogpe {

namespace {

bool is_full(Model m) { return m == Model::full_psi || m == Model::gauged_u || m == Model::full_psi_2dconf; }

// d f / d x_axis by FFT, physical representation in and out.
std::vector<cplx> fourier_derivative(const WaveField& phys, int axis) {
    const Grid3D& g = phys.grid();
    const auto d = g.dims();
    std::vector<cplx> out = phys.data();
    g.transforms().fft(out, axis, -1);
    const auto& k = g.axis(axis).wavenumbers();
    const double inv_n = 1.0 / g.axis(axis).size();
    for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j)
            for (int l = 0; l < d[2]; ++l) {
                const int idx = axis == 0 ? i : (axis == 1 ? j : l);
                out[g.index(i, j, l)] *= cplx(0.0, k[idx] * inv_n);
            }
    g.transforms().fft(out, axis, +1);
    return out;
}

double weighted_sum(const std::vector<double>& w, const std::vector<cplx>& a) {
    double s = 0.0;
    for (std::size_t q = 0; q < a.size(); ++q) s += w[q] * std::norm(a[q]);
    return s;
}

double weighted_inner_re(const std::vector<double>& w, const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double s = 0.0;
    for (std::size_t q = 0; q < a.size(); ++q) s += w[q] * (a[q] * std::conj(b[q])).real();
    return s;
}

double local_power(const std::vector<double>& w, const std::vector<cplx>& a, double sigma) {
    double s = 0.0;
    for (std::size_t q = 0; q < a.size(); ++q) s += w[q] * std::pow(std::norm(a[q]), sigma + 1.0);
    return s;
}

}  // namespace

EnergyTerms energy_terms(const WaveField& f, const SimParams& p) {
    const Grid3D& g = f.grid();
    const auto d = g.dims();
    const WaveField phys = f.converted(Representation::physical);
    const auto w = measure(g, Representation::physical);
    const auto& x1 = g.x1().coordinates();
    const auto& x2 = g.x2().coordinates();
    const auto& z = g.z().coordinates();
    const double o1 = p.omega.o1, o2 = p.omega.o2, oz = p.omega.oz;
    const bool full = is_full(p.model);
    const double eps = full ? p.epsilon : 0.0;
    EnergyTerms e;

    const Confinement c = g.confinement();
    if (c == Confinement::z_confined || c == Confinement::plane) {
        const auto d1 = fourier_derivative(phys, 0);
        const auto d2 = fourier_derivative(phys, 1);
        e.kinetic = 0.5 * (weighted_sum(w, d1) + weighted_sum(w, d2));
        std::vector<cplx> lz(phys.size()), mixed(phys.size());
        std::vector<double> v(phys.size());
        for (int i = 0; i < d[0]; ++i)
            for (int j = 0; j < d[1]; ++j)
                for (int l = 0; l < d[2]; ++l) {
                    const std::size_t q = g.index(i, j, l);
                    lz[q] = cplx(0.0, 1.0) * (x2[j] * d1[q] - x1[i] * d2[q]);
                    mixed[q] = cplx(0.0, 2.0 * eps * z[l]) * (o2 * d1[q] - o1 * d2[q]);
                    const double a = o2 * x1[i] - o1 * x2[j];
                    v[q] = 0.5 * (x1[i] * x1[i] + x2[j] * x2[j]) - 0.5 * a * a;
                    if (full)
                        v[q] += 1.5 * eps * eps * (o1 * o1 + o2 * o2) * z[l] * z[l] -
                                eps * oz * (o1 * x1[i] + o2 * x2[j]) * z[l];
                }
        e.rotation = -oz * weighted_inner_re(w, lz, phys.data());
        if (full) e.mixed = weighted_inner_re(w, mixed, phys.data());
        double pot = 0.0;
        for (std::size_t q = 0; q < v.size(); ++q) pot += w[q] * v[q] * std::norm(phys.data()[q]);
        e.potential = pot;
        if (full) e.confining = hz_expectation(f) / (p.epsilon * p.epsilon);
    } else {
        const auto dz = fourier_derivative(phys, 2);
        e.kinetic = 0.5 * weighted_sum(w, dz);
        std::vector<cplx> mixed(phys.size());
        std::vector<double> v(phys.size());
        for (int i = 0; i < d[0]; ++i)
            for (int j = 0; j < d[1]; ++j)
                for (int l = 0; l < d[2]; ++l) {
                    const std::size_t q = g.index(i, j, l);
                    const double a = o1 * x2[j] - o2 * x1[i];
                    mixed[q] = cplx(0.0, 2.0 * eps * a) * dz[q];
                    v[q] = z_potential_coefficient({o1, o2, oz}) * z[l] * z[l];
                    if (full)
                        v[q] += eps * oz * (o1 * x1[i] + o2 * x2[j]) * z[l] + 1.5 * eps * eps * a * a;
                }
        if (full) e.mixed = weighted_inner_re(w, mixed, phys.data());
        double pot = 0.0;
        for (std::size_t q = 0; q < v.size(); ++q) pot += w[q] * v[q] * std::norm(phys.data()[q]);
        e.potential = pot;
        if (c == Confinement::x_confined) {
            const WaveField sx = f.converted(Representation::spectral_x);
            const int nx = d[0];
            const double hz = g.z().spacing();
            double lsum = 0.0;
            Eigen::VectorXcd vec;
            for (int lev = 0; lev <= 2 * nx - 2; ++lev) {
                int first = 0;
                const Eigen::MatrixXcd L = angular_momentum_block(lev, nx, &first);
                vec.resize(L.rows());
                for (int l = 0; l < d[2]; ++l) {
                    for (Eigen::Index k = 0; k < L.rows(); ++k) vec(k) = sx.at(first + k, lev - first - static_cast<int>(k), l);
                    lsum += hz * vec.dot(L * vec).real();
                }
            }
            e.rotation = -oz * lsum;
            if (full) e.confining = hz_expectation(f) / (p.epsilon * p.epsilon);
        }
    }

    switch (p.model) {
        case Model::limit3d_phi:
        case Model::limit_phi1d: {
            AveragingEngine avg(f.grid_ptr(), {p.n_theta, false, p.sigma});
            e.nonlinear = p.lambda / (p.sigma + 1.0) * avg.averaged_power(f);
            break;
        }
        default:
            e.nonlinear = local_coupling(p) / (p.sigma + 1.0) * local_power(w, phys.data(), p.sigma);
    }
    return e;
}

double energy(const WaveField& f, const SimParams& p) { return energy_terms(f, p).total(); }

double energy_phi(const WaveField& phi, const SimParams& p) {
    SimParams q = p;
    q.model = Model::limit3d_phi;
    return energy(phi, q);
}

double hz_expectation(const WaveField& f) {
    const Grid3D& g = f.grid();
    const auto d = g.dims();
    double s = 0.0;
    if (g.confinement() == Confinement::z_confined) {
        const WaveField sz = f.converted(Representation::spectral_z);
        const auto w = measure(g, Representation::spectral_z);
        for (std::size_t q = 0; q < sz.size(); ++q) s += w[q] * (q % d[2] + 0.5) * std::norm(sz.data()[q]);
    } else if (g.confinement() == Confinement::x_confined) {
        const WaveField sx = f.converted(Representation::spectral_x);
        const auto w = measure(g, Representation::spectral_x);
        for (int i = 0; i < d[0]; ++i)
            for (int j = 0; j < d[1]; ++j)
                for (int l = 0; l < d[2]; ++l) {
                    const std::size_t q = g.index(i, j, l);
                    s += w[q] * (i + j + 1.0) * std::norm(sx.data()[q]);
                }
    } else {
        throw Unsupported("hz_expectation: grid has no confined direction");
    }
    return s;
}

std::vector<double> band_populations(const WaveField& f) {
    const Grid3D& g = f.grid();
    const auto d = g.dims();
    if (g.confinement() == Confinement::z_confined) {
        const WaveField sz = f.converted(Representation::spectral_z);
        const auto w = measure(g, Representation::spectral_z);
        std::vector<double> pop(d[2], 0.0);
        for (std::size_t q = 0; q < sz.size(); ++q) pop[q % d[2]] += w[q] * std::norm(sz.data()[q]);
        return pop;
    }
    if (g.confinement() == Confinement::x_confined) {
        const WaveField sx = f.converted(Representation::spectral_x);
        const auto w = measure(g, Representation::spectral_x);
        std::vector<double> pop(2 * d[0] - 1, 0.0);
        for (int i = 0; i < d[0]; ++i)
            for (int j = 0; j < d[1]; ++j)
                for (int l = 0; l < d[2]; ++l) {
                    const std::size_t q = g.index(i, j, l);
                    pop[i + j] += w[q] * std::norm(sx.data()[q]);
                }
        return pop;
    }
    return {mass(f)};
}

std::vector<double> joint_state_populations(const WaveField& f, const Oscillator2DBasis& basis) {
    const Grid3D& g = f.grid();
    if (g.confinement() != Confinement::x_confined)
        throw Unsupported("joint_state_populations: requires an x-confined grid");
    const auto d = g.dims();
    const WaveField sx = f.converted(Representation::spectral_x);
    const double hz = g.z().spacing();
    std::vector<double> pop;
    pop.reserve(basis.states().size());
    for (const auto& s : basis.states()) {
        double m = 0.0;
        for (int l = 0; l < d[2]; ++l) {
            cplx proj{};
            for (int a1 = 0; a1 <= s.n; ++a1) {
                const int a2 = s.n - a1;
                if (a1 >= d[0] || a2 >= d[1]) continue;
                proj += std::conj(s.coeffs[a1]) * sx.at(a1, a2, l);
            }
            m += hz * std::norm(proj);
        }
        pop.push_back(m);
    }
    return pop;
}

PotentialAnalysis effective_potential_analysis(const Omega& omega) {
    Eigen::Matrix2d q;
    q << 0.5 * (1.0 - omega.o2 * omega.o2), -0.5 * omega.o1 * omega.o2, -0.5 * omega.o1 * omega.o2,
        0.5 * (1.0 - omega.o1 * omega.o1);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es;
    es.computeDirect(q, Eigen::EigenvaluesOnly);
    PotentialAnalysis out;
    out.eigenvalues = {es.eigenvalues()(0), es.eigenvalues()(1)};
    out.confining = out.eigenvalues[0] > 0.0;
    return out;
}

DiagnosticsRecord make_record(const WaveField& f, double t, const SimParams& params) {
    DiagnosticsRecord r;
    r.t = t;
    r.mass = mass(f);
    r.energy = energy(f, params);
    const Confinement c = f.grid().confinement();
    r.hz_expectation = (c == Confinement::z_confined || c == Confinement::x_confined)
                           ? hz_expectation(f)
                           : std::numeric_limits<double>::quiet_NaN();
    r.band_populations = band_populations(f);
    r.boundary_mass = boundary_mass(f);
    return r;
}

void write_csv_header(std::ostream& os, const std::string& fingerprint) {
    os << "# config_fingerprint: " << fingerprint << "\n";
    os << "t,mass,energy,hz_expectation";
    for (int k = 0; k < 8; ++k) os << ",band_" << k;
    os << ",boundary_mass\n";
}

void write_csv_row(std::ostream& os, const DiagnosticsRecord& r) {
    char buf[64];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << buf;
    };
    put(r.t);
    for (double v : {r.mass, r.energy, r.hz_expectation}) {
        os << ',';
        put(v);
    }
    for (int k = 0; k < 8; ++k) {
        os << ',';
        put(k < static_cast<int>(r.band_populations.size()) ? r.band_populations[k] : 0.0);
    }
    os << ',';
    put(r.boundary_mass);
    os << '\n';
}

}  // namespace anisogpe
