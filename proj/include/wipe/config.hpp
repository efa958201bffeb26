// config.hpp: Scenario configuration: defaults, `key = value` files and
// command-line overrides.

#pragma once

#include "wipe/linalg.hpp"
#include "wipe/models.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wipe {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Scenario { factors_curve, qubit_qubit, spin_boson, two_spin_negativity };
enum class Mode { analytic, numeric, both };

inline const char* to_string(Scenario s) {
    switch (s) {
        case Scenario::factors_curve: return "factors_curve";
        case Scenario::qubit_qubit: return "qubit_qubit";
        case Scenario::spin_boson: return "spin_boson";
        case Scenario::two_spin_negativity: return "two_spin_negativity";
    }
    return "unknown";
}

inline const char* to_string(Mode m) {
    switch (m) {
        case Mode::analytic: return "analytic";
        case Mode::numeric: return "numeric";
        case Mode::both: return "both";
    }
    return "unknown";
}

inline Scenario parse_scenario(std::string_view name) {
    for (auto s : {Scenario::factors_curve, Scenario::qubit_qubit, Scenario::spin_boson,
                   Scenario::two_spin_negativity})
        if (name == to_string(s)) return s;
    throw ConfigError("unknown scenario '" + std::string(name) + "'");
}

inline Mode parse_mode(std::string_view name) {
    for (auto m : {Mode::analytic, Mode::numeric, Mode::both})
        if (name == to_string(m)) return m;
    throw ConfigError("unknown mode '" + std::string(name) + "'");
}

struct ScenarioConfig {
    Scenario scenario{Scenario::qubit_qubit};
    std::vector<double> p_list;
    double tau{1e-3};
    double dt{1e-6};
    double t_max{0.02};
    double angular_factor{1.0};  // multiplies every frequency; 2*pi reads "Hz" as cycles/s
    std::size_t record_every{0};
    std::string output_path;
    Mode mode{Mode::analytic};
    std::size_t threads{0};  // 0: hardware concurrency, capped by WIPE_SIM_THREADS

    QubitQubitModel qubit{};
    SpinBosonModel spin_boson{};
    TwoSpinTwoModeModel two_spin{};

    // factors_curve abscissa: -ln x / c
    double grid_min{0.0};
    double grid_max{3.0};
    std::size_t grid_points{601};

    std::size_t steps() const { return static_cast<std::size_t>(std::llround(t_max / dt)); }

    void validate() const;
};

/// Reference parameter set of each scenario.
inline ScenarioConfig default_config(Scenario scenario) {
    ScenarioConfig cfg;
    cfg.scenario = scenario;
    switch (scenario) {
        case Scenario::factors_curve:
            cfg.qubit.c = 1.0e3;
            cfg.tau = 1.0e-3;
            break;
        case Scenario::qubit_qubit:
            cfg.qubit = QubitQubitModel{0.5, Complex(0.5, 0.0), 1.0e3};
            cfg.tau = 1.0e-3;
            cfg.dt = cfg.tau / 1000.0;
            cfg.t_max = 0.02;
            cfg.p_list = {0.0, 0.25, 0.5, 0.75, 0.95, 1.0};
            break;
        case Scenario::spin_boson:
            cfg.spin_boson = SpinBosonModel{3.4e10, 1.0e-3, 1.0e7, 8};
            cfg.tau = 1.0e-8;
            cfg.dt = 5.0e-10;
            cfg.t_max = 4.0e-7;
            cfg.p_list = {0.0, 0.5, 0.9, 0.95, 0.99, 1.0};
            cfg.mode = Mode::numeric;
            break;
        case Scenario::two_spin_negativity:
            // 1.0e-3 mK
            cfg.two_spin = TwoSpinTwoModeModel{3.4e10, 4.87e7, 1.0e7, 1.0e-6, 1.0e7, 1.0e7, 4, 4};
            cfg.tau = 1.0e-8;
            cfg.dt = 5.0e-10;
            cfg.t_max = 2.0e-7;
            cfg.p_list = {0.0, 0.5, 0.9, 0.95, 0.99, 1.0};
            cfg.mode = Mode::numeric;
            break;
    }
    return cfg;
}

namespace config {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline double parse_double(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0' || !std::isfinite(v))
        throw ConfigError("'" + key + "': expected a number, got '" + value + "'");
    return v;
}

inline std::size_t parse_count(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const long long v = std::strtoll(value.c_str(), &end, 10);
    if (value.empty() || *end != '\0' || v < 0)
        throw ConfigError("'" + key + "': expected a non-negative integer, got '" + value + "'");
    return static_cast<std::size_t>(v);
}

inline std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::istringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
    if (out.empty()) throw ConfigError("'" + key + "': empty list");
    return out;
}

/// Applies one `key = value` setting.
inline void apply(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
    auto num = [&] { return parse_double(key, value); };
    auto count = [&] { return parse_count(key, value); };

    if (key == "scenario") {
        if (parse_scenario(value) != cfg.scenario)
            throw ConfigError("config is for scenario '" + value + "', running '" +
                              to_string(cfg.scenario) + "'");
    } else if (key == "p_list") cfg.p_list = parse_list(key, value);
    else if (key == "tau") cfg.tau = num();
    else if (key == "dt") cfg.dt = num();
    else if (key == "t_max") cfg.t_max = num();
    else if (key == "angular_factor") cfg.angular_factor = num();
    else if (key == "record_every") cfg.record_every = count();
    else if (key == "output_path" || key == "out") cfg.output_path = value;
    else if (key == "mode") cfg.mode = parse_mode(value);
    else if (key == "threads") cfg.threads = count();
    else if (key == "grid_min") cfg.grid_min = num();
    else if (key == "grid_max") cfg.grid_max = num();
    else if (key == "grid_points") cfg.grid_points = count();
    else if (key == "a") cfg.qubit.a = num();
    else if (key == "b") cfg.qubit.b.real(num());
    else if (key == "b_im") cfg.qubit.b.imag(num());
    else if (key == "c") {
        // single coupling constant of the qubit-qubit and spin-boson models
        cfg.qubit.c = num();
        cfg.spin_boson.coupling = num();
    } else if (key == "nu") cfg.spin_boson.nu = num();
    else if (key == "temperature") {
        cfg.spin_boson.temperature = num();
        cfg.two_spin.temperature = num();
    } else if (key == "truncation") cfg.spin_boson.truncation = count();
    else if (key == "nu0") cfg.two_spin.nu0 = num();
    else if (key == "nu1") cfg.two_spin.nu1 = num();
    else if (key == "a01") cfg.two_spin.a01 = num();
    else if (key == "c0") cfg.two_spin.c0 = num();
    else if (key == "c1") cfg.two_spin.c1 = num();
    else if (key == "truncation0") cfg.two_spin.truncation0 = count();
    else if (key == "truncation1") cfg.two_spin.truncation1 = count();
    else throw ConfigError("unknown key '" + key + "'");
}

/// Applies a `key=value` override as given on the command line.
inline void apply_assignment(ScenarioConfig& cfg, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos)
        throw ConfigError("expected key=value, got '" + std::string(assignment) + "'");
    const std::string key = trim(assignment.substr(0, eq));
    if (key.empty()) throw ConfigError("empty key in '" + std::string(assignment) + "'");
    apply(cfg, key, trim(assignment.substr(eq + 1)));
}

/// Flat `key = value` text; `#` starts a comment.
inline void apply_text(ScenarioConfig& cfg, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        try {
            apply_assignment(cfg, body);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
}

inline void apply_file(ScenarioConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    apply_text(cfg, buf.str());
}

/// Header label for a p column, e.g. "p=0.95".
inline std::string p_label(double p) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "p=%.12g", p);
    return buf;
}

}  // namespace config

/// Models with every frequency multiplied by angular_factor.
inline QubitQubitModel scaled_qubit_model(const ScenarioConfig& cfg) {
    QubitQubitModel m = cfg.qubit;
    m.c *= cfg.angular_factor;
    return m;
}

inline SpinBosonModel scaled_spin_boson_model(const ScenarioConfig& cfg) {
    SpinBosonModel m = cfg.spin_boson;
    m.nu *= cfg.angular_factor;
    m.coupling *= cfg.angular_factor;
    return m;
}

inline TwoSpinTwoModeModel scaled_two_spin_model(const ScenarioConfig& cfg) {
    TwoSpinTwoModeModel m = cfg.two_spin;
    for (double* f : {&m.nu0, &m.nu1, &m.a01, &m.c0, &m.c1}) *f *= cfg.angular_factor;
    return m;
}

inline void ScenarioConfig::validate() const {
    if (!(angular_factor > 0.0)) throw ConfigError("angular_factor must be positive");
    if (!(tau > 0.0)) throw ConfigError("tau must be positive");
    if (scenario == Scenario::factors_curve) {
        if (!(qubit.c > 0.0)) throw ConfigError("c must be positive");
        if (!(grid_min >= 0.0 && grid_max > grid_min))
            throw ConfigError("need 0 <= grid_min < grid_max");
        if (grid_points < 2) throw ConfigError("grid_points must be at least 2");
        return;
    }
    if (p_list.empty()) throw ConfigError("p_list must not be empty");
    for (double p : p_list)
        if (!(p >= 0.0 && p <= 1.0))
            throw ConfigError("p_list value " + std::to_string(p) + " outside [0, 1]");
    if (!(dt > 0.0 && dt <= tau)) throw ConfigError("need 0 < dt <= tau");
    if (!(t_max >= dt)) throw ConfigError("t_max must be at least dt");
    try {
        switch (scenario) {
            case Scenario::qubit_qubit:
                scaled_qubit_model(*this).validate();
                if (!(qubit.c > 0.0)) throw ConfigError("c must be positive");
                break;
            case Scenario::spin_boson: scaled_spin_boson_model(*this).validate(); break;
            case Scenario::two_spin_negativity: scaled_two_spin_model(*this).validate(); break;
            case Scenario::factors_curve: break;
        }
    } catch (const ModelError& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace wipe
