#include "property_checks.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "anisogpe/field.hpp"
#include "anisogpe/hermite.hpp"

namespace checks {

using namespace anisogpe;

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

namespace {

double dist(const WaveField& a, const WaveField& b) {
    WaveField d = a;
    const WaveField bb = b.converted(a.representation());
    for (std::size_t q = 0; q < d.size(); ++q) d.data()[q] -= bb.data()[q];
    return norm_L2(d);
}

double gauss(double x, double c) { return std::exp(-0.5 * (x - c) * (x - c)); }

WaveField run(const GridPtr& g, const SimParams& p, WaveField f, int n) {
    Stepper s(g, p);
    s.advance(f, n);
    return f;
}

const Model kModels[] = {Model::full_psi,        Model::gauged_u,    Model::limit3d_phi, Model::effective2d_varphi,
                         Model::full_psi_2dconf, Model::limit_phi1d, Model::effective1d};

}  // namespace

WaveField mixed_state(const GridPtr& g, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    const auto d = g->dims();
    const Confinement c = g->confinement();
    WaveField f;
    if (c == Confinement::z_confined || c == Confinement::plane) {
        f = WaveField(g, Representation::spectral_z);
        const auto& x1 = g->x1().coordinates();
        const auto& x2 = g->x2().coordinates();
        for (int n = 0; n < std::min(3, d[2]); ++n) {
            const cplx w(1.0 + u(rng), u(rng));
            const double a = u(rng), b = u(rng);
            for (int i = 0; i < d[0]; ++i)
                for (int j = 0; j < d[1]; ++j) f.at(i, j, n) = w * gauss(x1[i], a) * gauss(x2[j], b) / (n + 1.0);
        }
    } else {
        f = WaveField(g, Representation::spectral_x);
        const auto& z = g->z().coordinates();
        for (int a1 = 0; a1 < std::min(2, d[0]); ++a1)
            for (int a2 = 0; a2 < std::min(2, d[1]); ++a2) {
                const cplx w(1.0 + u(rng), u(rng));
                const double s = u(rng);
                for (int l = 0; l < d[2]; ++l) f.at(a1, a2, l) = w * gauss(z[l], s) / (1.0 + a1 + a2);
            }
    }
    f.to(Representation::physical);
    const double n = norm_L2(f);
    for (auto& v : f.data()) v /= n;
    return f;
}

SimParams property_params(Model m) {
    SimParams p;
    p.model = m;
    p.epsilon = 0.5;
    p.omega = {0.3, 0.2, 0.4};
    p.lambda = 1.0;
    p.grid = {32, 32, 8.0, 8.0, 8, 6, 64, 10.0};
    return p;
}

std::vector<CheckResult> unitarity_checks() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(7);
    std::normal_distribution<double> n01;
    std::vector<cplx> c(40);
    for (auto& v : c) v = cplx(n01(rng), n01(rng));
    double n0 = 0.0;
    for (auto v : c) n0 += std::norm(v);
    double worst_norm = 0.0, worst_group = 0.0, worst_period = 0.0;
    for (double th : {0.1, 1.7, -3.2, 25.0}) {
        auto a = c;
        apply_exp_Hz(th, a);
        double n1 = 0.0;
        for (auto v : a) n1 += std::norm(v);
        worst_norm = std::max(worst_norm, std::abs(std::sqrt(n1) - std::sqrt(n0)) / std::sqrt(n0));
        auto b = c;
        apply_exp_Hz(0.37, b);
        apply_exp_Hz(th - 0.37, b);
        auto p = c;
        apply_exp_Hz(th + 2.0 * std::acos(-1.0), p);
        for (std::size_t k = 0; k < c.size(); ++k) {
            worst_group = std::max(worst_group, std::abs(a[k] - b[k]));
            worst_period = std::max(worst_period, std::abs(p[k] + a[k]));
        }
    }
    out.push_back({"exp(-i theta H_z) preserves the l2 norm", worst_norm < 1e-14, fmt("rel. deviation %.2e", worst_norm)});
    out.push_back({"exp(-i theta H_z) group property", worst_group < 1e-12, fmt("max deviation %.2e", worst_group)});
    out.push_back({"exp(-i theta H_z) antiperiodic in 2 pi", worst_period < 1e-12, fmt("max deviation %.2e", worst_period)});

    for (Model m : kModels) {
        SimParams p = property_params(m);
        const GridPtr g = make_grid(p);
        const WaveField f0 = mixed_state(g, 3);
        const WaveField f1 = run(g, p, f0, 1000);
        const double d = std::abs(mass(f1) - mass(f0));
        out.push_back({"mass over 1000 steps, " + to_string(m), d < 1e-11, fmt("drift %.2e", d)});
    }
    return out;
}

std::vector<CheckResult> gauge_checks() {
    std::vector<CheckResult> out;
    const Omega om{0.3, 0.2, 0.4};
    for (Model m : {Model::full_psi, Model::full_psi_2dconf}) {
        SimParams p = property_params(m);
        const GridPtr g = make_grid(p);
        const Confinement c = g->confinement();
        const WaveField f = mixed_state(g, 11);
        double worst_rt = 0.0, worst_iso = 0.0;
        for (double eps : {1.0, 0.2, 0.025}) {
            const WaveField u = gauge_transform(f, eps, om, GaugeDirection::to_u, c);
            const WaveField back = gauge_transform(u, eps, om, GaugeDirection::to_psi, c);
            for (std::size_t q = 0; q < f.size(); ++q) worst_rt = std::max(worst_rt, std::abs(back.data()[q] - f.data()[q]));
            worst_iso = std::max(worst_iso, std::abs(norm_L2(u) - norm_L2(f)));
        }
        const std::string tag = c == Confinement::z_confined ? "z-confined" : "x-confined";
        out.push_back({"gauge round trip, " + tag, worst_rt < 1e-14, fmt("max deviation %.2e", worst_rt)});
        out.push_back({"gauge isometry, " + tag, worst_iso < 1e-14, fmt("norm deviation %.2e", worst_iso)});
    }
    return out;
}

std::vector<CheckResult> transform_checks() {
    std::vector<CheckResult> out;
    const Representation reps[] = {Representation::spectral_x, Representation::spectral_z, Representation::spectral_xz};
    for (Model m : {Model::full_psi, Model::effective2d_varphi, Model::full_psi_2dconf, Model::effective1d}) {
        SimParams p = property_params(m);
        const GridPtr g = make_grid(p);
        const WaveField f = mixed_state(g, 5);
        const double n0 = norm_L2(f);
        double worst_norm = 0.0, worst_rt = 0.0;
        for (Representation r : reps) {
            const WaveField s = f.converted(r);
            worst_norm = std::max(worst_norm, std::abs(norm_L2(s) - n0));
            const WaveField back = s.converted(Representation::physical);
            for (std::size_t q = 0; q < f.size(); ++q) worst_rt = std::max(worst_rt, std::abs(back.data()[q] - f.data()[q]));
        }
        const std::string tag = to_string(m);
        out.push_back({"representation changes preserve the norm, " + tag, worst_norm < 1e-11,
                       fmt("max deviation %.2e", worst_norm)});
        out.push_back({"representation round trip, " + tag, worst_rt < 1e-12, fmt("max deviation %.2e", worst_rt)});
    }
    return out;
}

std::vector<CheckResult> strang_order_checks() {
    std::vector<CheckResult> out;
    const double T = 0.2;
    for (Model m : kModels) {
        SimParams p = property_params(m);
        const GridPtr g = make_grid(p);
        const WaveField f0 = mixed_state(g, 9);
        WaveField sol[3];
        for (int k = 0; k < 3; ++k) {
            const int n = 10 << k;
            p.dt = T / n;
            sol[k] = run(g, p, f0, n);
        }
        const double e1 = dist(sol[0], sol[1]), e2 = dist(sol[1], sol[2]);
        const double rate = std::log2(e1 / e2);
        out.push_back({"Strang self-convergence, " + to_string(m), std::abs(rate - 2.0) <= 0.1,
                       fmt("rate %.3f", rate) + fmt(" (differences %.2e", e1) + fmt(", %.2e)", e2)});
    }
    return out;
}

std::vector<CheckResult> separability_checks() {
    std::vector<CheckResult> out;
    SimParams p = property_params(Model::gauged_u);
    p.omega = {0.0, 0.0, 0.4};
    p.lambda = 0.0;
    p.dt = 1e-3;
    const GridPtr g = make_grid(p);
    const WaveField f0 = mixed_state(g, 13);
    WaveField u = f0;
    Stepper(g, p).advance_gauged(u, 500);
    SimParams q = p;
    q.model = Model::limit3d_phi;
    const WaveField phi = run(g, q, f0, 500);
    const double d = dist(u, apply_confinement_propagator(phi, 0.5 / (p.epsilon * p.epsilon)));
    out.push_back({"linear gauged equation separates into filter times plane evolution", d < 1e-9,
                   fmt("distance %.2e", d)});
    return out;
}

std::vector<CheckResult> run_property_suite() {
    std::vector<CheckResult> all;
    for (auto* fn : {unitarity_checks, gauge_checks, transform_checks, strang_order_checks, separability_checks}) {
        auto r = fn();
        all.insert(all.end(), r.begin(), r.end());
    }
    return all;
}

}  // namespace checks
