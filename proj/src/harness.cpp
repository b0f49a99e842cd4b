#include "anisogpe/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "anisogpe/errors.hpp"

namespace anisogpe {

OrderFit fit_order(const std::vector<double>& eps, const std::vector<double>& err) {
    if (eps.size() != err.size()) throw std::invalid_argument("fit_order: size mismatch");
    if (eps.size() < 3) throw std::invalid_argument("fit_order: need at least 3 points");
    const std::size_t n = eps.size();
    std::vector<double> x(n), y(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (!(eps[k] > 0.0) || !(err[k] > 0.0) || !std::isfinite(err[k]))
            throw std::invalid_argument("fit_order: values must be positive and finite");
        x[k] = std::log(eps[k]);
        y[k] = std::log(err[k]);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        mx += x[k];
        my += y[k];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sxx += (x[k] - mx) * (x[k] - mx);
        sxy += (x[k] - mx) * (y[k] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_order: epsilons must not all coincide");
    OrderFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    for (std::size_t k = 0; k < n; ++k)
        f.max_residual = std::max(f.max_residual, std::abs(y[k] - (f.intercept + f.slope * x[k])));
    return f;
}

std::vector<std::string> monotonicity_flags(const std::vector<double>& eps, const std::vector<double>& err) {
    std::vector<std::string> flags;
    for (std::size_t k = 1; k < err.size() && k < eps.size(); ++k)
        if (err[k] > err[k - 1]) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "error increased from %.6e (eps=%g) to %.6e (eps=%g): under-resolution suspected",
                          err[k - 1], eps[k - 1], err[k], eps[k]);
            flags.emplace_back(buf);
        }
    return flags;
}

namespace {

int steps_for(double interval, double dt, const char* key) {
    const double r = interval / dt;
    const long n = std::lround(r);
    if (n < 1 || std::abs(r - n) > 1e-9 * std::max(1.0, r))
        throw ConfigError(key, "sample interval must be a positive multiple of the time step");
    return static_cast<int>(n);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Limit trajectory sampled at the report times, kept in the Hermite-z form.
std::vector<WaveField> limit_samples(const GridPtr& grid, SimParams p, double limit_dt, WaveField phi, int n_samples,
                                     double interval, std::vector<std::string>& warnings) {
    p.model = Model::limit3d_phi;
    p.dt = limit_dt;
    Stepper s(grid, p);
    for (const auto& w : s.warnings()) warnings.push_back("limit: " + w);
    const int per = steps_for(interval, limit_dt, "converge.limit_dt");
    std::vector<WaveField> out;
    phi.to(Representation::spectral_z);
    out.push_back(phi);
    for (int k = 0; k < n_samples; ++k) {
        s.advance(phi, per);
        out.push_back(phi);
    }
    return out;
}

}  // namespace

ConvergenceReport run_convergence(const SimParams& params, const ConvergenceSettings& st, const std::string& fingerprint) {
    const auto t_start = std::chrono::steady_clock::now();
    if (st.epsilons.size() < 3) throw ConfigError("converge.epsilons", "need at least three values");
    for (std::size_t k = 1; k < st.epsilons.size(); ++k)
        if (!(st.epsilons[k] < st.epsilons[k - 1]))
            throw ConfigError("converge.epsilons", "must be strictly decreasing");
    const double eps_min = st.epsilons.back();
    if (!(eps_min > 0.0) || st.epsilons.front() > 1.0) throw ConfigError("converge.epsilons", "must lie in (0, 1]");
    if (!(params.dt * params.dt < 0.01 * eps_min))
        throw ConfigError("time.dt", "dt^2 must stay below 0.01 * smallest epsilon");
    if (!(st.sample_interval > 0.0)) throw ConfigError("converge.sample_interval", "must be positive");
    const double limit_dt = st.limit_dt > 0.0 ? st.limit_dt : params.dt;
    const int per = steps_for(st.sample_interval, params.dt, "converge.sample_interval");
    steps_for(st.sample_interval, limit_dt, "converge.limit_dt");
    const double ns = params.t_final / st.sample_interval;
    const int n_samples = static_cast<int>(std::lround(ns));
    if (n_samples < 1 || std::abs(ns - n_samples) > 1e-9 * std::max(1.0, ns))
        throw ConfigError("time.t_final", "must be a positive multiple of the sample interval");

    SimParams base = params;
    base.model = Model::full_psi;
    base.epsilon = st.epsilons.front();
    base.validate();
    const GridPtr grid = make_grid(base);
    const WaveField psi0 = make_initial_state(grid, st.init);

    ConvergenceReport rep;
    rep.epsilons = st.epsilons;
    rep.corrected_data = st.corrected_data;
    rep.dt = params.dt;
    rep.limit_dt = limit_dt;
    rep.fingerprint = fingerprint;
    for (int k = 0; k <= n_samples; ++k) rep.sample_times.push_back(k * st.sample_interval);

    std::vector<WaveField> plain;
    if (!st.corrected_data) {
        const auto t0 = std::chrono::steady_clock::now();
        plain = limit_samples(grid, base, limit_dt, psi0, n_samples, st.sample_interval, rep.warnings);
        rep.limit_runtime = seconds_since(t0);
    }

    for (double eps : st.epsilons) {
        const auto t0 = std::chrono::steady_clock::now();
        SimParams q = base;
        q.epsilon = eps;
        q.model = Model::gauged_u;
        Stepper full(grid, q);
        for (const auto& w : full.warnings()) rep.warnings.push_back("eps=" + std::to_string(eps) + ": " + w);
        WaveField u = gauge_transform(psi0, eps, q.omega, GaugeDirection::to_u, Confinement::z_confined);
        const std::vector<WaveField> corrected =
            st.corrected_data ? limit_samples(grid, q, limit_dt, u, n_samples, st.sample_interval, rep.warnings)
                              : std::vector<WaveField>{};
        const std::vector<WaveField>& lim = st.corrected_data ? corrected : plain;

        std::vector<double> series;
        for (int k = 0; k <= n_samples; ++k) {
            if (k > 0) full.advance_gauged(u, per);
            const double t = rep.sample_times[k];
            WaveField psi = gauge_transform(u.converted(Representation::physical), eps, q.omega, GaugeDirection::to_psi,
                                            Confinement::z_confined);
            if (st.corrected_data) {
                WaveField ref = apply_confinement_propagator(lim[k], t / (eps * eps));
                ref.to(Representation::physical);
                ref = gauge_transform(ref, eps, q.omega, GaugeDirection::to_psi, Confinement::z_confined);
                for (std::size_t i = 0; i < psi.size(); ++i) psi.data()[i] -= ref.data()[i];
                series.push_back(norm_L2(psi));
            } else {
                series.push_back(l2_distance_filtered(psi, lim[k], t, eps));
            }
        }
        rep.errors.push_back(*std::max_element(series.begin(), series.end()));
        rep.error_series.push_back(std::move(series));
        rep.runtimes.push_back(seconds_since(t0));
    }

    rep.flags = monotonicity_flags(rep.epsilons, rep.errors);
    rep.flagged = !rep.flags.empty();
    if (std::all_of(rep.errors.begin(), rep.errors.end(), [](double e) { return e > 0.0; }))
        rep.fit = fit_order(rep.epsilons, rep.errors);
    else
        rep.warnings.emplace_back("zero error at some epsilon; order fit skipped");
    rep.total_runtime = seconds_since(t_start);
    return rep;
}

void write_report_json(const ConvergenceReport& r, const std::string& path) {
    nlohmann::json j;
    j["epsilons"] = r.epsilons;
    j["errors"] = r.errors;
    j["error_series"] = r.error_series;
    j["sample_times"] = r.sample_times;
    j["fitted_order"] = r.fit.slope;
    j["intercept"] = r.fit.intercept;
    j["max_residual"] = r.fit.max_residual;
    j["runtimes_s"] = r.runtimes;
    j["limit_runtime_s"] = r.limit_runtime;
    j["total_runtime_s"] = r.total_runtime;
    j["corrected_data"] = r.corrected_data;
    j["flagged"] = r.flagged;
    j["flags"] = r.flags;
    j["warnings"] = r.warnings;
    j["dt"] = r.dt;
    j["limit_dt"] = r.limit_dt;
    j["config_fingerprint"] = r.fingerprint;
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_report_json: cannot open " + path);
    os << j.dump(2) << "\n";
}

void write_plot_data(const ConvergenceReport& r, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_plot_data: cannot open " + path);
    os << "# config_fingerprint: " << r.fingerprint << "\n# epsilon error\n";
    char buf[80];
    for (std::size_t k = 0; k < r.epsilons.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", r.epsilons[k], r.errors[k]);
        os << buf;
    }
}

}  // namespace anisogpe
