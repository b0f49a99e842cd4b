#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstring>
#include <map>

#include "anisogpe/diagnostics.hpp"
#include "anisogpe/dynamics.hpp"
#include "anisogpe/errors.hpp"
#include "anisogpe/oscillator2d.hpp"
#include "support.hpp"

using namespace anisogpe;
using support::kPi;

namespace {

SimParams small_params(Model m) {
    SimParams p;
    p.model = m;
    p.grid = {32, 32, 8.0, 8.0, 8, 6, 64, 8.0};
    return p;
}

WaveField run(const GridPtr& g, const SimParams& p, WaveField f, int n) {
    Stepper s(g, p);
    s.advance(f, n);
    return f;
}

// All-Hermite solver of the Omega = 0 equation
//   i psi_t = -Delta_x psi / 2 + |x|^2 psi / 2 + H_z psi / eps^2 + lambda |psi|^2 psi
// in the basis chi_a(x1) chi_b(x2) chi_n(z), integrating factor plus RK4.
struct HermiteOracle {
    int nx, nz, qx, qz;
    double eps, lambda;
    std::vector<double> px, pz;  // chi at nodes, [mode * q + node]
    std::vector<double> wx, wz, xs, zs;
    std::vector<double> energy;

    HermiteOracle(int nx_, int nz_, double eps_, double lambda_)
        : nx(nx_), nz(nz_), qx(3 * nx_), qz(3 * nz_), eps(eps_), lambda(lambda_) {
        auto fill = [](int n, int q, std::vector<double>& p, std::vector<double>& w, std::vector<double>& x) {
            const GaussHermiteRule r = gauss_hermite_rule(q);
            x = r.nodes;
            w = r.weights;
            p.assign(static_cast<std::size_t>(n) * q, 0.0);
            std::vector<double> chi(n);
            for (int j = 0; j < q; ++j) {
                hermite_functions(x[j], chi);
                for (int m = 0; m < n; ++m) p[m * q + j] = chi[m];
            }
        };
        fill(nx, qx, px, wx, xs);
        fill(nz, qz, pz, wz, zs);
        energy.resize(static_cast<std::size_t>(nx) * nx * nz);
        for (int a = 0; a < nx; ++a)
            for (int b = 0; b < nx; ++b)
                for (int n = 0; n < nz; ++n) energy[idx(a, b, n)] = a + b + 1.0 + (n + 0.5) / (eps * eps);
    }
    std::size_t idx(int a, int b, int n) const { return (static_cast<std::size_t>(a) * nx + b) * nz + n; }

    // c -> lambda P(|psi|^2 psi)
    std::vector<cplx> nonlinear(const std::vector<cplx>& c) const {
        // synthesis axis by axis
        std::vector<cplx> t1(static_cast<std::size_t>(qx) * nx * nz), t2(static_cast<std::size_t>(qx) * qx * nz),
            v(static_cast<std::size_t>(qx) * qx * qz);
        for (int i = 0; i < qx; ++i)
            for (int a = 0; a < nx; ++a) {
                const double w = px[a * qx + i];
                for (int bn = 0; bn < nx * nz; ++bn) t1[i * nx * nz + bn] += w * c[a * nx * nz + bn];
            }
        for (int i = 0; i < qx; ++i)
            for (int j = 0; j < qx; ++j)
                for (int b = 0; b < nx; ++b) {
                    const double w = px[b * qx + j];
                    for (int n = 0; n < nz; ++n) t2[(i * qx + j) * nz + n] += w * t1[(i * nx + b) * nz + n];
                }
        for (int ij = 0; ij < qx * qx; ++ij)
            for (int l = 0; l < qz; ++l) {
                cplx s{};
                for (int n = 0; n < nz; ++n) s += pz[n * qz + l] * t2[ij * nz + n];
                v[ij * qz + l] = lambda * std::norm(s) * s;
            }
        std::vector<cplx> r2(static_cast<std::size_t>(qx) * qx * nz), r1(static_cast<std::size_t>(qx) * nx * nz),
            out(c.size());
        for (int ij = 0; ij < qx * qx; ++ij)
            for (int n = 0; n < nz; ++n) {
                cplx s{};
                for (int l = 0; l < qz; ++l) s += wz[l] * pz[n * qz + l] * v[ij * qz + l];
                r2[ij * nz + n] = s;
            }
        for (int i = 0; i < qx; ++i)
            for (int b = 0; b < nx; ++b)
                for (int j = 0; j < qx; ++j) {
                    const double w = wx[j] * px[b * qx + j];
                    for (int n = 0; n < nz; ++n) r1[(i * nx + b) * nz + n] += w * r2[(i * qx + j) * nz + n];
                }
        for (int a = 0; a < nx; ++a)
            for (int i = 0; i < qx; ++i) {
                const double w = wx[i] * px[a * qx + i];
                for (int bn = 0; bn < nx * nz; ++bn) out[a * nx * nz + bn] += w * r1[i * nx * nz + bn];
            }
        return out;
    }

    std::vector<cplx> solve(std::vector<cplx> c, double t_final, int steps) const {
        const double h = t_final / steps;
        // interaction picture a = e^{iEt} c
        auto rhs = [&](double t, const std::vector<cplx>& a) {
            std::vector<cplx> cc(a.size());
            for (std::size_t q = 0; q < a.size(); ++q) cc[q] = std::exp(cplx(0.0, -energy[q] * t)) * a[q];
            auto nl = nonlinear(cc);
            for (std::size_t q = 0; q < a.size(); ++q) nl[q] *= cplx(0.0, -1.0) * std::exp(cplx(0.0, energy[q] * t));
            return nl;
        };
        std::vector<cplx> a = c, tmp(c.size());
        for (int s = 0; s < steps; ++s) {
            const double t = s * h;
            const auto k1 = rhs(t, a);
            for (std::size_t q = 0; q < a.size(); ++q) tmp[q] = a[q] + 0.5 * h * k1[q];
            const auto k2 = rhs(t + 0.5 * h, tmp);
            for (std::size_t q = 0; q < a.size(); ++q) tmp[q] = a[q] + 0.5 * h * k2[q];
            const auto k3 = rhs(t + 0.5 * h, tmp);
            for (std::size_t q = 0; q < a.size(); ++q) tmp[q] = a[q] + h * k3[q];
            const auto k4 = rhs(t + h, tmp);
            for (std::size_t q = 0; q < a.size(); ++q) a[q] += h / 6.0 * (k1[q] + 2.0 * k2[q] + 2.0 * k3[q] + k4[q]);
        }
        for (std::size_t q = 0; q < a.size(); ++q) a[q] *= std::exp(cplx(0.0, -energy[q] * t_final));
        return a;
    }
};

// Coefficients of f(x) = exp(-(x - s)^2 / 2) in chi_0..chi_{n-1}.
std::vector<double> shifted_gaussian_coeffs(int n, double s) {
    const GaussHermiteRule r = gauss_hermite_rule(80);
    std::vector<double> c(n, 0.0), chi(n);
    for (std::size_t j = 0; j < r.nodes.size(); ++j) {
        hermite_functions(r.nodes[j], chi);
        const double f = std::exp(-0.5 * (r.nodes[j] - s) * (r.nodes[j] - s));
        for (int m = 0; m < n; ++m) c[m] += r.weights[j] * chi[m] * f;
    }
    return c;
}

// Field on a z-confined grid from all-Hermite coefficients, spectral_z.
WaveField from_hermite(const GridPtr& g, const std::vector<cplx>& c, int nx, int nz) {
    const auto d = g->dims();
    WaveField f(g, Representation::spectral_z);
    std::vector<double> chi(nx);
    std::vector<std::vector<double>> t1(d[0]), t2(d[1]);
    for (int i = 0; i < d[0]; ++i) {
        hermite_functions(g->x1().coordinates()[i], chi);
        t1[i] = chi;
    }
    for (int j = 0; j < d[1]; ++j) {
        hermite_functions(g->x2().coordinates()[j], chi);
        t2[j] = chi;
    }
    for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j)
            for (int a = 0; a < nx; ++a)
                for (int b = 0; b < nx; ++b) {
                    const double w = t1[i][a] * t2[j][b];
                    if (w == 0.0) continue;
                    for (int n = 0; n < nz; ++n) f.at(i, j, n) += w * c[(static_cast<std::size_t>(a) * nx + b) * nz + n];
                }
    return f;
}

// Dense matrix of the discrete limit operator on a plane grid.
Eigen::MatrixXcd dense_limit_operator(const Grid3D& g, const Omega& om) {
    const int n1 = g.dims()[0], n2 = g.dims()[1];
    auto deriv = [](const Axis& ax, int order) {
        const int n = ax.size();
        Eigen::MatrixXcd D(n, n);
        const auto& k = ax.wavenumbers();
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                cplx s{};
                for (int m = 0; m < n; ++m)
                    s += std::pow(cplx(0.0, k[m]), order) *
                         std::exp(cplx(0.0, 2.0 * kPi * m * (r - c) / n));
                D(r, c) = s / static_cast<double>(n);
            }
        return D;
    };
    const Eigen::MatrixXcd D1 = deriv(g.x1(), 1), D2 = deriv(g.x2(), 1);
    const Eigen::MatrixXcd D11 = deriv(g.x1(), 2), D22 = deriv(g.x2(), 2);
    const auto& x1 = g.x1().coordinates();
    const auto& x2 = g.x2().coordinates();
    const int N = n1 * n2;
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(N, N);
    auto id = [&](int i, int j) { return i * n2 + j; };
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            const int r = id(i, j);
            const double a = om.o2 * x1[i] - om.o1 * x2[j];
            H(r, r) += 0.5 * (x1[i] * x1[i] + x2[j] * x2[j]) - 0.5 * a * a;
            for (int m = 0; m < n1; ++m) {
                // -1/2 d11, -Omega_z L_z = -i Omega_z x2 d1 + i Omega_z x1 d2
                H(r, id(m, j)) += -0.5 * D11(i, m) - cplx(0.0, om.oz * x2[j]) * D1(i, m);
            }
            for (int m = 0; m < n2; ++m) H(r, id(i, m)) += -0.5 * D22(j, m) + cplx(0.0, om.oz * x1[i]) * D2(j, m);
        }
    return H;
}

}  // namespace

TEST_CASE("split plans") {
    for (Model m : {Model::full_psi, Model::gauged_u, Model::limit3d_phi, Model::effective2d_varphi,
                    Model::full_psi_2dconf, Model::limit_phi1d, Model::effective1d}) {
        CHECK(model_from_string(to_string(m)) == m);
        for (SplitOrder o : {SplitOrder::strang, SplitOrder::lie}) {
            const SplitStepPlan plan = build_plan(m, o);
            std::map<SubstepOp, double> total;
            for (const auto& s : plan.substeps) total[s.op] += s.coeff;
            for (auto [op, c] : total) CHECK(c == doctest::Approx(1.0).epsilon(1e-15));
            if (o == SplitOrder::strang) {
                const auto& ss = plan.substeps;
                for (std::size_t k = 0; k < ss.size(); ++k) CHECK(ss[k].op == ss[ss.size() - 1 - k].op);
            }
        }
    }
    const SplitStepPlan u = build_plan(Model::gauged_u, SplitOrder::strang);
    CHECK(u.substeps.front().op == SubstepOp::z_oscillator);
    CHECK(u.substeps.front().rep == Representation::spectral_z);
    CHECK(u.substeps.front().coeff == 0.5);
    CHECK_THROWS_AS(model_from_string("nope"), std::invalid_argument);
}

TEST_CASE("parameter validation names the key") {
    SimParams p;
    auto key = [&](const SimParams& q) {
        try {
            q.validate();
        } catch (const ConfigError& e) {
            return e.key();
        }
        return std::string();
    };
    CHECK(key(p).empty());
    p.sigma = 2.0;
    CHECK(key(p) == "physics.sigma");
    p = SimParams{};
    p.epsilon = 0.0;
    CHECK(key(p) == "physics.epsilon");
    p = SimParams{};
    p.dt = -1.0;
    CHECK(key(p) == "time.dt");
    p = SimParams{};
    p.grid.n1 = 100;
    CHECK(key(p) == "grid.n1");
}

TEST_CASE("linear ground state is stationary up to its phase") {
    SimParams p = small_params(Model::gauged_u);
    p.epsilon = 1.0;
    p.lambda = 0.0;
    p.dt = 2.5e-4;
    p.grid.nz_modes = 4;
    const GridPtr g = make_grid(p);
    const WaveField u0 = make_initial_state(g, InitSpec{});
    const WaveField u1 = run(g, p, u0, 4000);
    WaveField expect = u0;
    for (auto& v : expect.data()) v *= std::exp(cplx(0.0, -1.5));
    CHECK(support::distance(u1, expect) < 1e-8);
}

TEST_CASE("mass is conserved by the full stepper") {
    SimParams p = small_params(Model::full_psi);
    p.omega = {0.3, 0.2, 0.4};
    p.epsilon = 0.1;
    const GridPtr g = make_grid(p);
    const WaveField f0 = make_initial_state(g, InitSpec{0, 1.0, 0.5, -0.3, 0.0});
    const WaveField f1 = run(g, p, f0, 1000);
    CHECK(std::abs(mass(f1) - mass(f0)) < 1e-11);
    p.epsilon = 0.01;
    const WaveField f2 = run(g, p, f0, 200);
    CHECK(std::abs(mass(f2) - mass(f0)) < 1e-11);
}

TEST_CASE("rotation about the confinement axis is a phase on L_z eigenstates") {
    SimParams p = small_params(Model::gauged_u);
    p.epsilon = 1.0;
    p.lambda = 0.0;
    p.dt = 2.5e-4;
    p.grid.nz_modes = 2;
    const GridPtr g = make_grid(p);
    const auto b = build_joint_basis(1);
    const auto& x = g->x1().coordinates();
    for (const auto* s : b.level(1)) {
        WaveField f(g, Representation::spectral_z);
        for (int i = 0; i < 32; ++i)
            for (int j = 0; j < 32; ++j)
                f.at(i, j, 0) = s->coeffs[0] * support::chi_ref(0, x[i]) * support::chi_ref(1, x[j]) +
                                s->coeffs[1] * support::chi_ref(1, x[i]) * support::chi_ref(0, x[j]);
        SimParams q = p;
        q.omega.oz = 0.5;
        const WaveField rot = run(g, q, f, 4000);
        WaveField ref = run(g, p, f, 4000);
        for (auto& v : ref.data()) v *= std::exp(cplx(0.0, 0.5 * s->mu));
        // shear splitting of L_z, O(dt^2)
        CHECK(support::distance(rot, ref) < 5e-8);
    }
}

TEST_CASE("psi step is the conjugated u step, bit for bit") {
    SimParams p = small_params(Model::full_psi);
    p.omega = {0.3, 0.2, 0.4};
    p.epsilon = 0.2;
    const GridPtr g = make_grid(p);
    const WaveField psi = make_initial_state(g, InitSpec{1, 1.0, 0.4, 0.0, 0.0});
    const WaveField a = step_psi(psi, p);
    WaveField b = step_u(gauge_transform(psi, p.epsilon, p.omega, GaugeDirection::to_u, Confinement::z_confined), p);
    b.to(Representation::physical);
    b = gauge_transform(b, p.epsilon, p.omega, GaugeDirection::to_psi, Confinement::z_confined);
    CHECK(std::memcmp(a.data().data(), b.data().data(), a.size() * sizeof(cplx)) == 0);
}

TEST_CASE("psi stepper against an all-Hermite reference solver") {
    const int nx = 20, nz = 14;
    const double eps = 0.5, lambda = 1.0, T = 0.5;
    const auto gx = shifted_gaussian_coeffs(nx, 0.7);
    const auto gy = shifted_gaussian_coeffs(nx, 0.0);
    std::vector<cplx> c(static_cast<std::size_t>(nx) * nx * nz);
    double m = 0.0;
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < nx; ++b) {
            c[(a * nx + b) * nz + 0] = gx[a] * gy[b];
            c[(a * nx + b) * nz + 1] = cplx(0.0, 0.5) * gx[a] * gy[b];
        }
    for (auto v : c) m += std::norm(v);
    for (auto& v : c) v /= std::sqrt(m);

    const HermiteOracle oracle(nx, nz, eps, lambda);
    const auto cT = oracle.solve(c, T, 1000);

    SimParams p;
    p.model = Model::full_psi;
    p.epsilon = eps;
    p.lambda = lambda;
    p.dt = 2.5e-4;
    p.grid = {64, 64, 8.0, 8.0, nz, 4, 32, 8.0};
    const GridPtr g = make_grid(p);
    const WaveField f0 = from_hermite(g, c, nx, nz);
    const WaveField fT = run(g, p, f0.converted(Representation::physical), 2000);
    // both sides truncate the z expansion; collocation aliasing dominates
    CHECK(support::distance(fT, from_hermite(g, cT, nx, nz)) < 3e-5);
}

TEST_CASE("linear limit model against dense diagonalization") {
    SimParams p;
    p.model = Model::limit3d_phi;
    p.lambda = 0.0;
    p.omega = {0.3, 0.2, 0.4};
    p.dt = 1e-4;
    p.grid = {16, 16, 6.0, 6.0, 2, 4, 32, 8.0};
    const GridPtr g = make_grid(p);
    const WaveField f0 = make_initial_state(g, InitSpec{0, 0.9, 0.6, -0.4, 0.0});
    const WaveField fT = run(g, p, f0, 2000).converted(Representation::spectral_z);

    const auto pg = make_plane_grid(16, 16, 6.0, 6.0);
    const Eigen::MatrixXcd H = dense_limit_operator(*pg, p.omega);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    const WaveField s0 = f0.converted(Representation::spectral_z);
    Eigen::VectorXcd v(256);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) v(i * 16 + j) = s0.at(i, j, 0);
    Eigen::VectorXcd w = es.eigenvectors().adjoint() * v;
    for (int k = 0; k < 256; ++k) w(k) *= std::exp(cplx(0.0, -0.2 * es.eigenvalues()(k)));
    const Eigen::VectorXcd vT = es.eigenvectors() * w;
    double d = 0.0;
    const double h = g->x1().spacing();
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            d += h * h * std::norm(fT.at(i, j, 0) - vT(i * 16 + j));
            d += h * h * std::norm(fT.at(i, j, 1));
        }
    CHECK(std::sqrt(d) < 1e-8);
}

TEST_CASE("effective 2D model: mass and breathing") {
    SimParams p;
    p.model = Model::effective2d_varphi;
    p.grid = {64, 64, 10.0, 10.0, 8, 4, 32, 8.0};
    p.dt = 1e-3;
    const GridPtr g = make_grid(p);
    const double w = 1.4;
    const WaveField f0 = make_initial_state(g, InitSpec{0, w, 0.0, 0.0, 0.0});
    {
        SimParams q = p;
        q.omega = {0.3, 0.2, 0.4};
        const WaveField f1 = run(g, q, f0, 1000);
        CHECK(std::abs(mass(f1) - mass(f0)) < 1e-11);
    }
    p.lambda = 0.0;
    Stepper s(g, p);
    WaveField f = f0;
    const auto& x = g->x1().coordinates();
    double worst = 0.0;
    for (int k = 1; k <= 20; ++k) {
        s.advance(f, 100);
        const WaveField ph = f.converted(Representation::physical);
        double r2 = 0.0;
        const double h = g->x1().spacing();
        for (int i = 0; i < 64; ++i)
            for (int j = 0; j < 64; ++j) r2 += h * h * (x[i] * x[i] + x[j] * x[j]) * std::norm(ph.at(i, j, 0));
        const double t = 0.1 * k;
        // <|x|^2> of a Gaussian in the unit trap: oscillates at frequency 2
        const double expect = w * w * std::cos(t) * std::cos(t) + std::sin(t) * std::sin(t) / (w * w);
        worst = std::max(worst, std::abs(r2 - expect) / expect);
    }
    CHECK(worst < 1e-2);
}

TEST_CASE("x-confined full model") {
    SimParams p = small_params(Model::full_psi_2dconf);
    p.omega = {0.3, 0.2, 0.4};
    p.epsilon = 0.2;
    const GridPtr g = make_grid(p);
    const WaveField psi = make_initial_state(g, InitSpec{0, 1.0, 0.0, 0.0, 0.3});
    const WaveField f1 = run(g, p, psi, 1000);
    CHECK(std::abs(mass(f1) - mass(psi)) < 1e-11);

    const WaveField a = step_psi_2dconf(psi, p);
    WaveField b =
        step_u_2dconf(gauge_transform(psi, p.epsilon, p.omega, GaugeDirection::to_u, Confinement::x_confined), p);
    b.to(Representation::physical);
    b = gauge_transform(b, p.epsilon, p.omega, GaugeDirection::to_psi, Confinement::x_confined);
    CHECK(support::max_abs_diff(a.data(), b.data()) < 1e-14);

    SimParams q = small_params(Model::full_psi_2dconf);
    q.epsilon = 1.0;
    q.lambda = 0.0;
    q.dt = 2.5e-4;
    const WaveField g0 = make_initial_state(g, InitSpec{});
    const WaveField g1 = run(g, q, g0, 4000);
    WaveField expect = g0;
    for (auto& v : expect.data()) v *= std::exp(cplx(0.0, -1.5));
    CHECK(support::distance(g1, expect) < 1e-8);
}

TEST_CASE("one-dimensional models") {
    SimParams p;
    p.model = Model::effective1d;
    CHECK(local_coupling(p) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-14));
    p.lambda = 3.0;
    CHECK(local_coupling(p) == doctest::Approx(3.0 / (2.0 * kPi)).epsilon(1e-14));

    // Omega1^2 + Omega2^2 = 1: no z potential, free propagation
    p.lambda = 0.0;
    p.omega = {0.6, 0.8, 0.0};
    p.grid.nz = 128;
    p.grid.half_length_z = 20.0;
    p.dt = 0.01;
    const GridPtr g = make_grid(p);
    Stepper s(g, p);
    REQUIRE(!s.warnings().empty());
    CHECK(s.warnings()[0].find("not confining") != std::string::npos);
    WaveField f = make_initial_state(g, InitSpec{});
    WaveField exact = f.converted(Representation::spectral_z);
    const auto& k = g->z().wavenumbers();
    for (int l = 0; l < 128; ++l) exact.at(0, 0, l) *= std::exp(cplx(0.0, -0.5 * k[l] * k[l] * 1.0));
    s.advance(f, 100);
    CHECK(support::distance(f, exact) < 1e-12);

    SimParams q = small_params(Model::limit_phi1d);
    q.omega = {0.3, 0.2, 0.4};
    const GridPtr gx = make_grid(q);
    const WaveField f0 = make_initial_state(gx, InitSpec{});
    const WaveField f1 = run(gx, q, f0, 500);
    CHECK(std::abs(mass(f1) - mass(f0)) < 1e-9);
}

TEST_CASE("stiffness warning") {
    SimParams p = small_params(Model::full_psi);
    p.epsilon = 0.01;
    p.dt = 1e-3;
    Stepper s(make_grid(p), p);
    bool found = false;
    for (const auto& w : s.warnings()) found |= w.find("exceeds pi") != std::string::npos;
    CHECK(found);
}
