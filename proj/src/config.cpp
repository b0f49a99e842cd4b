#include "anisogpe/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "anisogpe/errors.hpp"

namespace anisogpe {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    double x = 0.0;
    const char* first = v.data();
    const char* last = v.data() + v.size();
    if (!v.empty() && *first == '+') ++first;
    auto [p, ec] = std::from_chars(first, last, x);
    if (ec != std::errc() || p != last || v.empty()) throw ConfigError(key, "expected a number, got '" + v + "'");
    return x;
}

long long to_integer(const std::string& key, const std::string& v) {
    long long x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size() || v.empty())
        throw ConfigError(key, "expected an integer, got '" + v + "'");
    return x;
}

int to_int(const std::string& key, const std::string& v) {
    const long long x = to_integer(key, v);
    if (x < -2147483647LL || x > 2147483647LL) throw ConfigError(key, "integer out of range");
    return static_cast<int>(x);
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError(key, "expected true or false, got '" + v + "'");
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_double(key, trim(item)));
    if (out.empty()) throw ConfigError(key, "expected a comma separated list");
    return out;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Field {
    std::function<void(RunConfig&, const std::string&, const std::string&)> set;
    std::function<std::string(const RunConfig&)> get;
};

#define REAL(path) \
    Field { [](RunConfig& c, const std::string& k, const std::string& v) { c.path = to_double(k, v); }, \
            [](const RunConfig& c) { return fmt(c.path); } }

#define INT(path) \
    Field { [](RunConfig& c, const std::string& k, const std::string& v) { c.path = to_int(k, v); }, \
            [](const RunConfig& c) { return std::to_string(c.path); } }

const std::vector<std::pair<std::string, Field>>& table() {
    static const std::vector<std::pair<std::string, Field>> t = {
        {"scenario", {[](RunConfig& c, const std::string&, const std::string& v) { c.scenario = v; },
                      [](const RunConfig& c) { return c.scenario; }}},
        {"model",
         {[](RunConfig& c, const std::string&, const std::string& v) {
              try {
                  c.params.model = model_from_string(v);
              } catch (const std::invalid_argument&) {
                  throw ConfigError("model", "unknown model '" + v + "'");
              }
          },
          [](const RunConfig& c) { return to_string(c.params.model); }}},
        {"seed", {[](RunConfig& c, const std::string&, const std::string& v) {
                      const long long x = to_integer("seed", v);
                      if (x < 0) throw ConfigError("seed", "must be non-negative");
                      c.seed = static_cast<std::uint64_t>(x);
                  },
                  [](const RunConfig& c) { return std::to_string(c.seed); }}},
        {"physics.epsilon", REAL(params.epsilon)},
        {"physics.omega1", REAL(params.omega.o1)},
        {"physics.omega2", REAL(params.omega.o2)},
        {"physics.omega_z", REAL(params.omega.oz)},
        {"physics.lambda", REAL(params.lambda)},
        {"physics.sigma", REAL(params.sigma)},
        {"time.dt", REAL(params.dt)},
        {"time.t_final", REAL(params.t_final)},
        {"time.order",
         {[](RunConfig& c, const std::string&, const std::string& v) {
              if (v == "strang")
                  c.params.order = SplitOrder::strang;
              else if (v == "lie")
                  c.params.order = SplitOrder::lie;
              else
                  throw ConfigError("time.order", "expected strang or lie, got '" + v + "'");
          },
          [](const RunConfig& c) { return std::string(c.params.order == SplitOrder::lie ? "lie" : "strang"); }}},
        {"time.snapshot_stride", INT(snapshot_stride)},
        {"time.diagnostics_stride", INT(diagnostics_stride)},
        {"grid.n1", INT(params.grid.n1)},
        {"grid.n2", INT(params.grid.n2)},
        {"grid.half_length1", REAL(params.grid.half_length1)},
        {"grid.half_length2", REAL(params.grid.half_length2)},
        {"grid.nz_modes", INT(params.grid.nz_modes)},
        {"grid.nx_modes", INT(params.grid.nx_modes)},
        {"grid.nz", INT(params.grid.nz)},
        {"grid.half_length_z", REAL(params.grid.half_length_z)},
        {"averaging.n_theta", INT(params.n_theta)},
        {"init.band", {[](RunConfig& c, const std::string&, const std::string& v) { c.init.band = c.params.band = to_int("init.band", v); },
                       [](const RunConfig& c) { return std::to_string(c.params.band); }}},
        {"init.width", REAL(init.width)},
        {"init.shift1", REAL(init.shift1)},
        {"init.shift2", REAL(init.shift2)},
        {"init.shift_z", REAL(init.shift_z)},
        {"converge.epsilons",
         {[](RunConfig& c, const std::string&, const std::string& v) { c.epsilons = to_list("converge.epsilons", v); },
          [](const RunConfig& c) {
              std::string s;
              for (std::size_t k = 0; k < c.epsilons.size(); ++k) s += (k ? ", " : "") + fmt(c.epsilons[k]);
              return s;
          }}},
        {"converge.corrected_data",
         {[](RunConfig& c, const std::string&, const std::string& v) { c.corrected_data = to_bool("converge.corrected_data", v); },
          [](const RunConfig& c) { return std::string(c.corrected_data ? "true" : "false"); }}},
        {"converge.sample_interval", REAL(sample_interval)},
        {"converge.limit_dt", REAL(limit_dt)},
        {"output.directory", {[](RunConfig& c, const std::string&, const std::string& v) { c.output_directory = v; },
                              [](const RunConfig& c) { return c.output_directory; }}},
    };
    return t;
}

#undef REAL
#undef INT

const Field* find_field(const std::string& key) {
    for (const auto& [k, f] : table())
        if (k == key) return &f;
    return nullptr;
}

}  // namespace

void RunConfig::validate() const {
    params.validate();
    if (init.band != params.band) throw ConfigError("init.band", "inconsistent band");
    if (!(init.width > 0.0)) throw ConfigError("init.width", "must be positive");
    if (snapshot_stride < 0) throw ConfigError("time.snapshot_stride", "must be non-negative");
    if (diagnostics_stride < 1) throw ConfigError("time.diagnostics_stride", "must be at least 1");
    if (epsilons.size() < 3) throw ConfigError("converge.epsilons", "need at least three values");
    for (std::size_t k = 0; k < epsilons.size(); ++k) {
        if (!(epsilons[k] > 0.0 && epsilons[k] <= 1.0)) throw ConfigError("converge.epsilons", "must lie in (0, 1]");
        if (k > 0 && !(epsilons[k] < epsilons[k - 1]))
            throw ConfigError("converge.epsilons", "must be strictly decreasing");
    }
    if (!(sample_interval > 0.0)) throw ConfigError("converge.sample_interval", "must be positive");
    if (!(limit_dt >= 0.0)) throw ConfigError("converge.limit_dt", "must be non-negative");
    if (output_directory.empty()) throw ConfigError("output.directory", "must not be empty");
}

ConvergenceSettings RunConfig::convergence_settings() const {
    ConvergenceSettings s;
    s.epsilons = epsilons;
    s.corrected_data = corrected_data;
    s.sample_interval = sample_interval;
    s.limit_dt = limit_dt;
    s.init = init;
    return s;
}

std::vector<std::string> scenario_names() { return {"default", "isotropic"}; }

RunConfig scenario_preset(const std::string& name) {
    RunConfig c;
    c.scenario = name;
    if (name == "default") {
        c.params.omega = {0.3, 0.2, 0.4};
        c.params.lambda = 1.0;
        c.params.sigma = 1.0;
        c.params.t_final = 0.5;
        c.params.n_theta = 2 * c.params.grid.nz_modes;
        c.limit_dt = 5e-3;
        return c;
    }
    if (name == "isotropic") {
        c.params.omega = {0.0, 0.0, 0.0};
        c.params.grid = {64, 64, 8.0, 8.0, 16, 8, 64, 8.0};
        c.params.t_final = 1.0;
        return c;
    }
    throw ConfigError("scenario", "unknown scenario '" + name + "'");
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
    const Field* f = find_field(key);
    if (!f) throw ConfigError(key, "unknown key");
    f->set(cfg, key, trim(value));
}

RunConfig parse_config(std::istream& is) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("", "line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        if (!find_field(key)) throw ConfigError(key, "unknown key");
        if (!seen.insert(key).second) throw ConfigError(key, "duplicate key");
        entries.emplace_back(std::move(key), trim(line.substr(eq + 1)));
    }
    std::string scenario = "default";
    for (const auto& [k, v] : entries)
        if (k == "scenario") scenario = v;
    RunConfig cfg = scenario_preset(scenario);
    for (const auto& [k, v] : entries)
        if (k != "scenario") apply_setting(cfg, k, v);
    return cfg;
}

RunConfig parse_config_string(const std::string& text) {
    std::istringstream is(text);
    return parse_config(is);
}

RunConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("", "cannot open config file " + path);
    return parse_config(is);
}

std::string serialize_config(const RunConfig& cfg) {
    std::string out;
    for (const auto& [k, f] : table()) out += k + " = " + f.get(cfg) + "\n";
    return out;
}

std::vector<std::string> config_keys() {
    std::vector<std::string> keys;
    for (const auto& kv : table()) keys.push_back(kv.first);
    return keys;
}

std::string config_fingerprint(const RunConfig& cfg) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : serialize_config(cfg)) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace anisogpe
