#include "anisogpe/dynamics.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "anisogpe/averaging.hpp"
#include "anisogpe/errors.hpp"
#include "anisogpe/oscillator2d.hpp"

namespace anisogpe {

namespace {

const char* const kModelNames[] = {"full_psi",        "gauged_u",    "limit3d_phi", "effective2d_varphi",
                                   "full_psi_2dconf", "limit_phi1d", "effective1d"};

bool z_confined_model(Model m) {
    return m == Model::full_psi || m == Model::gauged_u || m == Model::limit3d_phi;
}
bool x_confined_model(Model m) { return m == Model::full_psi_2dconf || m == Model::limit_phi1d; }
bool full_model(Model m) { return m == Model::full_psi || m == Model::gauged_u || m == Model::full_psi_2dconf; }

}  // namespace

std::string to_string(Model m) { return kModelNames[static_cast<int>(m)]; }

Model model_from_string(const std::string& name) {
    for (int k = 0; k < 7; ++k)
        if (name == kModelNames[k]) return static_cast<Model>(k);
    throw std::invalid_argument("unknown model '" + name + "'");
}

std::string to_string(SubstepOp op) {
    switch (op) {
        case SubstepOp::z_oscillator: return "z_oscillator";
        case SubstepOp::x_levels: return "x_levels";
        case SubstepOp::rotation: return "rotation";
        case SubstepOp::x1_adi: return "x1_adi";
        case SubstepOp::x2_adi: return "x2_adi";
        case SubstepOp::z_kinetic: return "z_kinetic";
        case SubstepOp::potential: return "potential";
        case SubstepOp::pointwise: return "pointwise";
        case SubstepOp::nonlinear_rk2: return "nonlinear_rk2";
    }
    return "unknown";
}

void SimParams::validate() const {
    auto fail = [](const char* key, const std::string& msg) { throw ConfigError(key, msg); };
    if (!(epsilon > 0.0 && epsilon <= 1.0)) fail("physics.epsilon", "must lie in (0, 1]");
    if (!(sigma >= 1.0 && sigma < 2.0)) fail("physics.sigma", "must lie in [1, 2)");
    if (!std::isfinite(lambda)) fail("physics.lambda", "must be finite");
    if (!std::isfinite(omega.o1) || !std::isfinite(omega.o2) || !std::isfinite(omega.oz))
        fail("physics.omega", "components must be finite");
    if (!(dt > 0.0)) fail("time.dt", "must be positive");
    if (!(t_final >= 0.0)) fail("time.t_final", "must be non-negative");
    auto pow2 = [](int n) { return n > 0 && (n & (n - 1)) == 0; };
    if (!pow2(grid.n1)) fail("grid.n1", "must be a power of two");
    if (!pow2(grid.n2)) fail("grid.n2", "must be a power of two");
    if (!pow2(grid.nz)) fail("grid.nz", "must be a power of two");
    if (!(grid.half_length1 > 0.0)) fail("grid.half_length1", "must be positive");
    if (!(grid.half_length2 > 0.0)) fail("grid.half_length2", "must be positive");
    if (!(grid.half_length_z > 0.0)) fail("grid.half_length_z", "must be positive");
    if (grid.nz_modes < 1) fail("grid.nz_modes", "must be at least 1");
    if (grid.nx_modes < 1) fail("grid.nx_modes", "must be at least 1");
    if (n_theta < 0) fail("averaging.n_theta", "must be non-negative");
    if (band < 0 || band >= grid.nz_modes) fail("init.band", "must lie in [0, grid.nz_modes)");
}

GridPtr make_grid(const SimParams& p) {
    const GridSpec& g = p.grid;
    switch (p.model) {
        case Model::full_psi:
        case Model::gauged_u:
        case Model::limit3d_phi:
            return make_z_confined_grid(g.n1, g.n2, g.half_length1, g.half_length2, g.nz_modes);
        case Model::effective2d_varphi:
            return make_plane_grid(g.n1, g.n2, g.half_length1, g.half_length2);
        case Model::full_psi_2dconf:
        case Model::limit_phi1d:
            return make_x_confined_grid(g.nx_modes, g.nz, g.half_length_z);
        case Model::effective1d:
            return make_line_grid(g.nz, g.half_length_z);
    }
    throw std::logic_error("make_grid: unknown model");
}

WaveField make_initial_state(const GridPtr& grid, const InitSpec& init) {
    if (!(init.width > 0.0)) throw std::invalid_argument("make_initial_state: width must be positive");
    const Grid3D& g = *grid;
    const auto d = g.dims();
    const auto& x1 = g.x1().coordinates();
    const auto& x2 = g.x2().coordinates();
    const auto& z = g.z().coordinates();
    const double w = init.width;
    auto gauss2 = [&](double a, double b) {
        const double r2 = (a - init.shift1) * (a - init.shift1) + (b - init.shift2) * (b - init.shift2);
        return std::exp(-0.5 * r2 / (w * w)) / (std::sqrt(std::numbers::pi) * w);
    };
    auto gauss1 = [&](double s) {
        return std::exp(-0.5 * (s - init.shift_z) * (s - init.shift_z) / (w * w)) / std::pow(std::numbers::pi * w * w, 0.25);
    };
    WaveField f(grid, Representation::physical);
    std::vector<double> chi;
    switch (g.confinement()) {
        case Confinement::z_confined: {
            if (init.band < 0 || init.band >= d[2]) throw std::invalid_argument("make_initial_state: band out of range");
            chi.resize(init.band + 1);
            std::vector<double> prof(d[2]);
            for (int l = 0; l < d[2]; ++l) {
                hermite_functions(z[l], chi);
                prof[l] = chi[init.band];
            }
            for (int i = 0; i < d[0]; ++i)
                for (int j = 0; j < d[1]; ++j) {
                    const double gx = gauss2(x1[i], x2[j]);
                    for (int l = 0; l < d[2]; ++l) f.at(i, j, l) = gx * prof[l];
                }
            break;
        }
        case Confinement::plane:
            for (int i = 0; i < d[0]; ++i)
                for (int j = 0; j < d[1]; ++j) f.at(i, j, 0) = gauss2(x1[i], x2[j]);
            break;
        case Confinement::x_confined: {
            if (init.band < 0 || init.band >= d[0]) throw std::invalid_argument("make_initial_state: band out of range");
            chi.resize(init.band + 1);
            std::vector<double> p1(d[0]), p2(d[1]);
            for (int i = 0; i < d[0]; ++i) {
                hermite_functions(x1[i], chi);
                p1[i] = chi[init.band];
            }
            for (int j = 0; j < d[1]; ++j) {
                hermite_functions(x2[j], std::span<double>(chi.data(), 1));
                p2[j] = chi[0];
            }
            for (int i = 0; i < d[0]; ++i)
                for (int j = 0; j < d[1]; ++j)
                    for (int l = 0; l < d[2]; ++l) f.at(i, j, l) = p1[i] * p2[j] * gauss1(z[l]);
            break;
        }
        case Confinement::line:
            for (int l = 0; l < d[2]; ++l) f.at(0, 0, l) = gauss1(z[l]);
            break;
    }
    const double m = mass(f);
    if (std::abs(m - 1.0) > 1e-6)
        throw DomainTooSmall("make_initial_state: initial profile not resolved (mass " + std::to_string(m) + ")");
    return f;
}

SplitStepPlan build_plan(Model model, SplitOrder order) {
    using R = Representation;
    using O = SubstepOp;
    std::vector<Substep> inner;  // first half of a Strang step, outermost first
    Substep centre{};
    switch (model) {
        case Model::full_psi:
        case Model::gauged_u:
            inner = {{O::z_oscillator, R::spectral_z, 0.5}, {O::x1_adi, R::physical, 0.5}, {O::x2_adi, R::physical, 0.5}};
            centre = {O::pointwise, R::physical, 1.0};
            break;
        case Model::limit3d_phi:
            inner = {{O::x1_adi, R::spectral_z, 0.5}, {O::x2_adi, R::spectral_z, 0.5}, {O::potential, R::spectral_z, 0.5}};
            centre = {O::nonlinear_rk2, R::spectral_z, 1.0};
            break;
        case Model::effective2d_varphi:
            inner = {{O::x1_adi, R::physical, 0.5}, {O::x2_adi, R::physical, 0.5}};
            centre = {O::pointwise, R::physical, 1.0};
            break;
        case Model::full_psi_2dconf:
            inner = {{O::x_levels, R::spectral_x, 0.5}, {O::z_kinetic, R::physical, 0.5}};
            centre = {O::pointwise, R::physical, 1.0};
            break;
        case Model::limit_phi1d:
            inner = {{O::rotation, R::spectral_x, 0.5}, {O::z_kinetic, R::spectral_x, 0.5}, {O::potential, R::spectral_x, 0.5}};
            centre = {O::nonlinear_rk2, R::spectral_x, 1.0};
            break;
        case Model::effective1d:
            inner = {{O::z_kinetic, R::physical, 0.5}};
            centre = {O::pointwise, R::physical, 1.0};
            break;
    }
    SplitStepPlan plan;
    plan.order = order;
    if (order == SplitOrder::lie) {
        for (auto s : inner) {
            s.coeff = 1.0;
            plan.substeps.push_back(s);
        }
        plan.substeps.push_back(centre);
    } else {
        plan.substeps = inner;
        plan.substeps.push_back(centre);
        for (auto it = inner.rbegin(); it != inner.rend(); ++it) plan.substeps.push_back(*it);
    }
    return plan;
}

double local_coupling(const SimParams& p) {
    switch (p.model) {
        case Model::effective2d_varphi: return kappa_n(p.band, p.sigma, p.lambda);
        case Model::effective1d: {
            const double k = kappa_n(0, p.sigma, 1.0);
            return p.lambda * k * k;
        }
        default: return p.lambda;
    }
}

double z_potential_coefficient(const Omega& omega) {
    return 0.5 * (1.0 - (omega.o1 * omega.o1 + omega.o2 * omega.o2));
}

struct Stepper::Impl {
    GridPtr grid;
    SimParams p;
    SplitStepPlan plan;
    std::vector<std::string> warnings;
    double coupling = 0.0;
    std::array<std::vector<double>, 3> symbol;  // Fourier symbols per axis, full size
    std::vector<double> v_lin;                  // linear potential (potential substep)
    std::vector<double> v_pw;                   // potential of the pointwise substep
    std::unique_ptr<AveragingEngine> avg;

    std::map<std::pair<int, double>, std::vector<cplx>> phases;
    std::map<std::pair<int, double>, std::vector<Eigen::MatrixXcd>> blocks;
    std::vector<int> block_first;

    void build();
    void build_symbols();
    const std::vector<cplx>& phase_for(SubstepOp op, double coeff);
    const std::vector<Eigen::MatrixXcd>& blocks_for(SubstepOp op, double coeff);

    void run_plan(WaveField& f) const;
    void apply(const Substep& s, WaveField& f) const;
    void apply_levels(const std::vector<Eigen::MatrixXcd>& bl, WaveField& f) const;
};

void Stepper::Impl::build_symbols() {
    const Grid3D& g = *grid;
    const auto d = g.dims();
    const std::size_t n = g.size();
    const auto& x1 = g.x1().coordinates();
    const auto& x2 = g.x2().coordinates();
    const auto& z = g.z().coordinates();
    const double o1 = p.omega.o1, o2 = p.omega.o2, oz = p.omega.oz;
    const bool full = full_model(p.model);
    const double eps = full ? p.epsilon : 0.0;
    auto each = [&](auto&& fn) {
        for (int i = 0; i < d[0]; ++i)
            for (int j = 0; j < d[1]; ++j)
                for (int l = 0; l < d[2]; ++l) fn(i, j, l, g.index(i, j, l));
    };
    const Confinement c = g.confinement();
    if (c == Confinement::z_confined || c == Confinement::plane) {
        const auto& k1 = g.x1().wavenumbers();
        const auto& k2 = g.x2().wavenumbers();
        symbol[0].resize(n);
        symbol[1].resize(n);
        // index i on axis 0 is k1 in the x1 substep; likewise j for x2
        each([&](int i, int j, int l, std::size_t q) {
            symbol[0][q] = 0.5 * k1[i] * k1[i] + oz * x2[j] * k1[i] - 2.0 * eps * z[l] * o2 * k1[i];
            symbol[1][q] = 0.5 * k2[j] * k2[j] - oz * x1[i] * k2[j] + 2.0 * eps * z[l] * o1 * k2[j];
        });
        std::vector<double> v(n);
        each([&](int i, int j, int l, std::size_t q) {
            const double a = o2 * x1[i] - o1 * x2[j];
            v[q] = 0.5 * (x1[i] * x1[i] + x2[j] * x2[j]) - 0.5 * a * a;
            if (full)
                v[q] += 1.5 * eps * eps * (o1 * o1 + o2 * o2) * z[l] * z[l] - eps * oz * (o1 * x1[i] + o2 * x2[j]) * z[l];
        });
        if (p.model == Model::limit3d_phi)
            v_lin = std::move(v);
        else
            v_pw = std::move(v);
    } else {
        const auto& kz = g.z().wavenumbers();
        symbol[2].resize(n);
        each([&](int i, int j, int l, std::size_t q) {
            const double a = o1 * x2[j] - o2 * x1[i];
            symbol[2][q] = 0.5 * kz[l] * kz[l] - 2.0 * eps * a * kz[l];
        });
        std::vector<double> v(n);
        each([&](int i, int j, int l, std::size_t q) {
            v[q] = z_potential_coefficient(p.omega) * z[l] * z[l];
            if (full) {
                const double b = o2 * x1[i] - o1 * x2[j];
                v[q] += eps * oz * (o1 * x1[i] + o2 * x2[j]) * z[l] + 1.5 * eps * eps * b * b;
            }
        });
        if (p.model == Model::limit_phi1d)
            v_lin = std::move(v);
        else
            v_pw = std::move(v);
    }
}

const std::vector<cplx>& Stepper::Impl::phase_for(SubstepOp op, double coeff) {
    const auto key = std::make_pair(static_cast<int>(op), coeff);
    auto it = phases.find(key);
    if (it != phases.end()) return it->second;
    const double tau = coeff * p.dt;
    std::vector<cplx> ph;
    auto expi = [](double a) { return cplx(std::cos(a), -std::sin(a)); };
    switch (op) {
        case SubstepOp::z_oscillator: {
            const int nz = grid->z().size();
            ph.resize(nz);
            for (int l = 0; l < nz; ++l) ph[l] = oscillator_phase(tau / (p.epsilon * p.epsilon), l + 0.5);
            break;
        }
        case SubstepOp::x1_adi:
        case SubstepOp::x2_adi:
        case SubstepOp::z_kinetic: {
            const int axis = op == SubstepOp::x1_adi ? 0 : (op == SubstepOp::x2_adi ? 1 : 2);
            const auto& s = symbol[axis];
            const double inv_n = 1.0 / grid->axis(axis).size();
            ph.resize(s.size());
            for (std::size_t q = 0; q < s.size(); ++q) ph[q] = inv_n * expi(tau * s[q]);
            break;
        }
        case SubstepOp::potential:
            ph.resize(v_lin.size());
            for (std::size_t q = 0; q < v_lin.size(); ++q) ph[q] = expi(tau * v_lin[q]);
            break;
        default:
            throw std::logic_error("phase_for: substep has no phase table");
    }
    return phases.emplace(key, std::move(ph)).first->second;
}

const std::vector<Eigen::MatrixXcd>& Stepper::Impl::blocks_for(SubstepOp op, double coeff) {
    const auto key = std::make_pair(static_cast<int>(op), coeff);
    auto it = blocks.find(key);
    if (it != blocks.end()) return it->second;
    const double tau = coeff * p.dt;
    const int nx = grid->x1().size();
    const int top = 2 * nx - 2;
    std::vector<Eigen::MatrixXcd> out(top + 1);
    block_first.assign(top + 1, 0);
    for (int lev = 0; lev <= top; ++lev) {
        int first = 0;
        const Eigen::MatrixXcd L = angular_momentum_block(lev, nx, &first);
        block_first[lev] = first;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(L);
        Eigen::VectorXcd e(L.rows());
        for (Eigen::Index k = 0; k < L.rows(); ++k) {
            const double a = tau * p.omega.oz * es.eigenvalues()(k);
            e(k) = cplx(std::cos(a), std::sin(a));
        }
        Eigen::MatrixXcd U = es.eigenvectors() * e.asDiagonal() * es.eigenvectors().adjoint();
        if (op == SubstepOp::x_levels) U *= oscillator_phase(tau / (p.epsilon * p.epsilon), lev + 1.0);
        out[lev] = std::move(U);
    }
    return blocks.emplace(key, std::move(out)).first->second;
}

void Stepper::Impl::build() {
    const Confinement c = grid->confinement();
    const bool want_z = z_confined_model(p.model), want_x = x_confined_model(p.model);
    if ((want_z && c != Confinement::z_confined) || (want_x && c != Confinement::x_confined) ||
        (p.model == Model::effective2d_varphi && c != Confinement::plane) ||
        (p.model == Model::effective1d && c != Confinement::line))
        throw GridMismatch("Stepper: grid does not match model " + to_string(p.model));

    plan = build_plan(p.model, p.order);
    coupling = local_coupling(p);
    build_symbols();
    if (p.model == Model::limit3d_phi || p.model == Model::limit_phi1d)
        avg = std::make_unique<AveragingEngine>(grid, AveragingConfig{p.n_theta, false, p.sigma});

    for (const auto& s : plan.substeps) {
        switch (s.op) {
            case SubstepOp::x_levels:
            case SubstepOp::rotation: blocks_for(s.op, s.coeff); break;
            case SubstepOp::pointwise:
            case SubstepOp::nonlinear_rk2: break;
            default: phase_for(s.op, s.coeff);
        }
    }

    const double r2 = p.omega.o1 * p.omega.o1 + p.omega.o2 * p.omega.o2;
    if (r2 >= 1.0) {
        std::ostringstream os;
        os << "effective potential is not confining: Omega1^2 + Omega2^2 = " << r2
           << " >= 1 (confinement requires < 1)";
        warnings.push_back(os.str());
    }
    if (full_model(p.model) && p.dt / (p.epsilon * p.epsilon) > std::numbers::pi) {
        std::ostringstream os;
        os << "dt / eps^2 = " << p.dt / (p.epsilon * p.epsilon)
           << " exceeds pi; stiff phases are applied exactly modulo 2 pi";
        warnings.push_back(os.str());
    }
}

void Stepper::Impl::apply_levels(const std::vector<Eigen::MatrixXcd>& bl, WaveField& f) const {
    const auto d = grid->dims();
    const int nx = d[0];
    Eigen::VectorXcd v;
    for (int l = 0; l < d[2]; ++l)
        for (int lev = 0; lev < static_cast<int>(bl.size()); ++lev) {
            const Eigen::MatrixXcd& U = bl[lev];
            const int m = static_cast<int>(U.rows());
            const int first = block_first[lev];
            v.resize(m);
            for (int k = 0; k < m; ++k) v(k) = f.at(first + k, lev - first - k, l);
            v = U * v;
            for (int k = 0; k < m; ++k) f.at(first + k, lev - first - k, l) = v(k);
        }
    (void)nx;
}

void Stepper::Impl::apply(const Substep& s, WaveField& f) const {
    f.to(s.rep);
    const auto& eng = grid->transforms();
    const double tau = s.coeff * p.dt;
    auto& data = f.data();
    auto table = [&](SubstepOp op) -> const std::vector<cplx>& {
        return phases.at(std::make_pair(static_cast<int>(op), s.coeff));
    };
    switch (s.op) {
        case SubstepOp::z_oscillator: {
            const auto& ph = table(s.op);
            const std::size_t nz = ph.size();
            for (std::size_t q = 0; q < data.size(); ++q) data[q] *= ph[q % nz];
            break;
        }
        case SubstepOp::x1_adi:
        case SubstepOp::x2_adi:
        case SubstepOp::z_kinetic: {
            const int axis = s.op == SubstepOp::x1_adi ? 0 : (s.op == SubstepOp::x2_adi ? 1 : 2);
            const auto& ph = table(s.op);
            eng.fft(data, axis, -1);
            for (std::size_t q = 0; q < data.size(); ++q) data[q] *= ph[q];
            eng.fft(data, axis, +1);
            break;
        }
        case SubstepOp::potential: {
            const auto& ph = table(s.op);
            for (std::size_t q = 0; q < data.size(); ++q) data[q] *= ph[q];
            break;
        }
        case SubstepOp::pointwise: {
            const double sg = p.sigma;
            for (std::size_t q = 0; q < data.size(); ++q) {
                const double a2 = std::norm(data[q]);
                const double nl = sg == 1.0 ? a2 : std::pow(a2, sg);
                const double ang = tau * (v_pw[q] + coupling * nl);
                data[q] *= cplx(std::cos(ang), -std::sin(ang));
            }
            break;
        }
        case SubstepOp::nonlinear_rk2: {
            const cplx mi(0.0, -p.lambda);
            WaveField k1 = avg->average(f);
            WaveField mid = f;
            for (std::size_t q = 0; q < data.size(); ++q) mid.data()[q] += (0.5 * tau) * mi * k1.data()[q];
            WaveField k2 = avg->average(mid);
            for (std::size_t q = 0; q < data.size(); ++q) data[q] += tau * mi * k2.data()[q];
            break;
        }
        case SubstepOp::x_levels:
        case SubstepOp::rotation:
            apply_levels(blocks.at(std::make_pair(static_cast<int>(s.op), s.coeff)), f);
            break;
    }
}

void Stepper::Impl::run_plan(WaveField& f) const {
    for (const auto& s : plan.substeps) apply(s, f);
}

Stepper::Stepper(GridPtr grid, const SimParams& params) : impl_(std::make_unique<Impl>()) {
    if (!grid) throw std::invalid_argument("Stepper: null grid");
    params.validate();
    impl_->grid = std::move(grid);
    impl_->p = params;
    impl_->build();
}

Stepper::~Stepper() = default;

const SplitStepPlan& Stepper::plan() const noexcept { return impl_->plan; }
const SimParams& Stepper::params() const noexcept { return impl_->p; }
const GridPtr& Stepper::grid() const noexcept { return impl_->grid; }
const std::vector<std::string>& Stepper::warnings() const noexcept { return impl_->warnings; }

void Stepper::step(WaveField& f) const { advance(f, 1); }

void Stepper::advance_gauged(WaveField& u, int n_steps) const {
    if (!u.grid().same_layout(*impl_->grid)) throw GridMismatch("Stepper: field lives on a different grid");
    for (int k = 0; k < n_steps; ++k) impl_->run_plan(u);
}

void Stepper::advance(WaveField& f, int n_steps) const {
    if (!f.grid().same_layout(*impl_->grid)) throw GridMismatch("Stepper: field lives on a different grid");
    const Model m = impl_->p.model;
    const bool gauge = m == Model::full_psi || m == Model::full_psi_2dconf;
    const Confinement conf = m == Model::full_psi ? Confinement::z_confined : Confinement::x_confined;
    if (gauge) {
        f.to(Representation::physical);
        f = gauge_transform(f, impl_->p.epsilon, impl_->p.omega, GaugeDirection::to_u, conf);
    }
    for (int k = 0; k < n_steps; ++k) impl_->run_plan(f);
    if (gauge) {
        f.to(Representation::physical);
        f = gauge_transform(f, impl_->p.epsilon, impl_->p.omega, GaugeDirection::to_psi, conf);
    }
}

namespace {

WaveField one_step(const WaveField& f, SimParams p, Model m) {
    p.model = m;
    Stepper s(f.grid_ptr(), p);
    WaveField out = f;
    s.step(out);
    out.to(f.representation());
    return out;
}

}  // namespace

WaveField step_u(const WaveField& u, const SimParams& p) { return one_step(u, p, Model::gauged_u); }
WaveField step_psi(const WaveField& psi, const SimParams& p) { return one_step(psi, p, Model::full_psi); }
WaveField step_phi_limit3d(const WaveField& phi, const SimParams& p) { return one_step(phi, p, Model::limit3d_phi); }
WaveField step_varphi_2d(const WaveField& varphi, const SimParams& p, int band) {
    SimParams q = p;
    q.band = band;
    return one_step(varphi, q, Model::effective2d_varphi);
}
WaveField step_u_2dconf(const WaveField& u, const SimParams& p) {
    SimParams q = p;
    q.model = Model::full_psi_2dconf;
    Stepper s(u.grid_ptr(), q);
    WaveField out = u;
    s.advance_gauged(out, 1);
    out.to(u.representation());
    return out;
}
WaveField step_psi_2dconf(const WaveField& psi, const SimParams& p) { return one_step(psi, p, Model::full_psi_2dconf); }
WaveField step_phi1d_limit(const WaveField& phi, const SimParams& p) { return one_step(phi, p, Model::limit_phi1d); }
WaveField step_1d(const WaveField& varphi, const SimParams& p) { return one_step(varphi, p, Model::effective1d); }

}  // namespace anisogpe
