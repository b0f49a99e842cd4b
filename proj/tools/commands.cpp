#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "anisogpe/diagnostics.hpp"
#include "anisogpe/errors.hpp"
#include "anisogpe/hermite.hpp"

namespace anisogpe::cli {

namespace fs = std::filesystem;

namespace {

std::string num(double x, const char* f = "%.10g") {
    char buf[48];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

fs::path prepare_dir(const std::string& dir) {
    fs::path p(dir);
    fs::create_directories(p);
    return p;
}

void report_potential(const Omega& omega, std::ostream& err) {
    if (!effective_potential_analysis(omega).confining)
        err << "warning: omega1^2 + omega2^2 >= 1, the effective potential is not confining\n";
}

}  // namespace

void apply_environment(RunConfig& cfg) {
    const char* v = std::getenv("ANISOGPE_OUTPUT_DIR");
    if (v && *v) cfg.output_directory = v;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    const SimParams& p = cfg.params;
    const double ratio = p.t_final / p.dt;
    const long n_steps = std::lround(ratio);
    if (std::abs(ratio - n_steps) > 1e-9 * std::max(1.0, ratio)) {
        err << "config error: time.t_final: must be a multiple of time.dt\n";
        return kExitConfig;
    }
    report_potential(p.omega, err);
    const std::string fp = config_fingerprint(cfg);
    const fs::path dir = prepare_dir(cfg.output_directory);

    const GridPtr grid = make_grid(p);
    WaveField f;
    try {
        f = make_initial_state(grid, cfg.init);
    } catch (const DomainTooSmall& e) {
        err << "resolution flag: " << e.what() << "\n";
        return kExitResolution;
    } catch (const std::invalid_argument& e) {
        err << "config error: init.band: " << e.what() << "\n";
        return kExitConfig;
    }
    Stepper stepper(grid, p);
    for (const auto& w : stepper.warnings()) err << "warning: " << w << "\n";

    std::ofstream csv(dir / "diagnostics.csv");
    write_csv_header(csv, fp);
    {
        std::ofstream cfg_out(dir / "config.resolved");
        cfg_out << "# config_fingerprint: " << fp << "\n" << serialize_config(cfg);
    }
    auto snapshot = [&](long step) {
        char name[40];
        std::snprintf(name, sizeof name, "snapshot_%08ld.gpef", step);
        save_field(f, (dir / name).string());
    };

    bool flagged = false;
    auto record = [&](long step) {
        const DiagnosticsRecord r = make_record(f, step * p.dt, p);
        write_csv_row(csv, r);
        if (!std::isfinite(r.mass) || !std::isfinite(r.energy)) flagged = true;
        if (r.boundary_mass > kBoundaryMassLimit) flagged = true;
    };

    record(0);
    if (cfg.snapshot_stride > 0) snapshot(0);
    long done = 0;
    while (done < n_steps) {
        long next = std::min(n_steps, done + cfg.diagnostics_stride);
        if (cfg.snapshot_stride > 0) next = std::min(next, (done / cfg.snapshot_stride + 1) * cfg.snapshot_stride);
        stepper.advance(f, static_cast<int>(next - done));
        done = next;
        if (done % cfg.diagnostics_stride == 0 || done == n_steps) record(done);
        if (cfg.snapshot_stride > 0 && done % cfg.snapshot_stride == 0) snapshot(done);
    }
    out << "model " << to_string(p.model) << ": " << n_steps << " steps, final mass " << num(mass(f), "%.15g")
        << ", fingerprint " << fp << "\n";
    out << "wrote " << (dir / "diagnostics.csv").string() << "\n";
    if (flagged) {
        err << "resolution flag: boundary mass above " << num(kBoundaryMassLimit) << " or non-finite diagnostics\n";
        return kExitResolution;
    }
    return kExitOk;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    report_potential(cfg.params.omega, err);
    const std::string fp = config_fingerprint(cfg);
    const ConvergenceReport rep = run_convergence(cfg.params, cfg.convergence_settings(), fp);
    const fs::path dir = prepare_dir(cfg.output_directory);
    write_report_json(rep, (dir / "converge_report.json").string());
    write_plot_data(rep, (dir / "converge_plot.dat").string());
    for (const auto& w : rep.warnings) err << "warning: " << w << "\n";
    out << "epsilon        error            runtime_s\n";
    for (std::size_t k = 0; k < rep.epsilons.size(); ++k)
        out << num(rep.epsilons[k], "%-14.6g") << " " << num(rep.errors[k], "%-16.6e") << " "
            << num(rep.runtimes[k], "%.2f") << "\n";
    out << "fitted order " << num(rep.fit.slope, "%.4f") << ", max residual " << num(rep.fit.max_residual, "%.4f")
        << ", fingerprint " << fp << "\n";
    if (rep.flagged) {
        for (const auto& s : rep.flags) err << "resolution flag: " << s << "\n";
        return kExitResolution;
    }
    return kExitOk;
}

int cmd_kappa(int n_max, double sigma, double lambda, const std::string& out_dir, std::ostream& out,
              std::ostream& err) {
    if (n_max < 0) {
        err << "config error: n_max: must be non-negative\n";
        return kExitConfig;
    }
    if (!(sigma >= 1.0 && sigma < 2.0)) {
        err << "config error: physics.sigma: must lie in [1, 2)\n";
        return kExitConfig;
    }
    const fs::path dir = prepare_dir(out_dir);
    std::ofstream csv(dir / "kappa.csv");
    csv << "n,kappa\n";
    for (int n = 0; n <= n_max; ++n) {
        const double k = kappa_n(n, sigma, lambda);
        out << n << " " << num(k, "%.15g") << "\n";
        csv << n << "," << num(k, "%.17g") << "\n";
    }
    return kExitOk;
}

int cmd_diagnose(const Omega& omega, std::ostream& out) {
    const PotentialAnalysis a = effective_potential_analysis(omega);
    out << "eigenvalues " << num(a.eigenvalues[1], "%.15g") << " " << num(a.eigenvalues[0], "%.15g") << "\n";
    out << (a.confining ? "confining" : "not confining") << "\n";
    return kExitOk;
}

}  // namespace anisogpe::cli
