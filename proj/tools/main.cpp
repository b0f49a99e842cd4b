#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "anisogpe/errors.hpp"
#include "commands.hpp"

using namespace anisogpe;

namespace {

struct ConfigArgs {
    std::string file;
    std::string scenario;
    std::vector<std::string> sets;
};

void add_config_options(CLI::App* app, ConfigArgs& a) {
    app->add_option("-c,--config", a.file, "key = value config file");
    app->add_option("--scenario", a.scenario, "preset to start from (ignored with --config)");
    app->add_option("-s,--set", a.sets, "override, key=value (repeatable)");
}

RunConfig resolve(const ConfigArgs& a) {
    RunConfig cfg = !a.file.empty() ? load_config(a.file) : scenario_preset(a.scenario.empty() ? "default" : a.scenario);
    for (const auto& s : a.sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError(s, "override must read key=value");
        apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
    }
    cli::apply_environment(cfg);
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rotating Gross-Pitaevskii simulator with strong anisotropic confinement"};
    app.require_subcommand(1);

    ConfigArgs sim_args, conv_args;
    auto* sim = app.add_subcommand("simulate", "integrate one model and write diagnostics");
    add_config_options(sim, sim_args);
    auto* conv = app.add_subcommand("converge", "epsilon sweep against the averaged limit");
    add_config_options(conv, conv_args);

    int n_max = 4;
    double sigma = 1.0, lambda = 1.0;
    std::string kappa_dir = "out";
    auto* kap = app.add_subcommand("kappa", "table of effective band couplings");
    kap->add_option("--n-max", n_max, "largest band index")->capture_default_str();
    kap->add_option("--sigma", sigma, "nonlinearity exponent")->capture_default_str();
    kap->add_option("--lambda", lambda, "coupling constant")->capture_default_str();
    kap->add_option("-o,--output", kappa_dir, "output directory")->capture_default_str();

    std::vector<double> omega{0.0, 0.0, 0.0};
    auto* diag = app.add_subcommand("diagnose", "effective potential eigenvalues and confinement verdict");
    diag->add_option("omega", omega, "omega1 omega2 [omega_z]")->expected(2, 3)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kExitConfig;
    }

    try {
        if (*sim) return cli::cmd_simulate(resolve(sim_args), std::cout, std::cerr);
        if (*conv) return cli::cmd_converge(resolve(conv_args), std::cout, std::cerr);
        if (*kap) {
            if (const char* v = std::getenv("ANISOGPE_OUTPUT_DIR"); v && *v) kappa_dir = v;
            return cli::cmd_kappa(n_max, sigma, lambda, kappa_dir, std::cout, std::cerr);
        }
        if (*diag) return cli::cmd_diagnose({omega[0], omega[1], omega.size() > 2 ? omega[2] : 0.0}, std::cout);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::kExitConfig;
    } catch (const DomainTooSmall& e) {
        std::cerr << "resolution flag: " << e.what() << "\n";
        return cli::kExitResolution;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
