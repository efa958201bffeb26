// wipe_sim.cpp: Command-line driver for the coherence-conservation scenarios.
//
//   wipe-sim <scenario> [--config FILE] [--set key=value ...] [--out FILE]
//            [--mode analytic|numeric|both]
//
// Exit codes: 0 success, 2 configuration error, 3 numerical-integrity abort.

#include "wipe/wipe.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIntegrity = 3;

bool caused_by_integrity(const wipe::SweepError& e) {
    try {
        std::rethrow_exception(e.cause());
    } catch (const wipe::IntegrityError&) {
        return true;
    } catch (...) {
        return false;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coherence conservation under a rapidly dissipating environment"};
    app.set_version_flag("--version", "wipe-sim 1.0.0");

    std::string scenario_name;
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_path;
    std::string mode_name;
    bool quiet = false;

    app.add_option("scenario", scenario_name,
                   "factors_curve | qubit_qubit | spin_boson | two_spin_negativity")
        ->required();
    app.add_option("--config", config_path, "key = value configuration file")
        ->check(CLI::ExistingFile);
    app.add_option("--set", overrides, "override a setting (key=value), repeatable")
        ->take_all();
    app.add_option("--out", out_path, "CSV output path (default: stdout)");
    app.add_option("--mode", mode_name, "qubit_qubit evaluation path")
        ->check(CLI::IsMember({"analytic", "numeric", "both"}));
    app.add_flag("-q,--quiet", quiet, "suppress the integrity summary on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    wipe::ScenarioConfig cfg;
    try {
        cfg = wipe::default_config(wipe::parse_scenario(scenario_name));
        if (!config_path.empty()) wipe::config::apply_file(cfg, config_path);
        for (const auto& kv : overrides) wipe::config::apply_assignment(cfg, kv);
        if (!mode_name.empty()) cfg.mode = wipe::parse_mode(mode_name);
        if (!out_path.empty()) cfg.output_path = out_path;
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "wipe-sim: configuration error: " << e.what() << '\n';
        return kExitConfig;
    }

    wipe::IntegrityReport integrity;
    wipe::ResultTable table;
    try {
        table = wipe::sweep(cfg, &integrity);
    } catch (const wipe::IntegrityError& e) {
        std::cerr << "wipe-sim: numerical integrity abort: " << e.what() << '\n';
        return kExitIntegrity;
    } catch (const wipe::SweepError& e) {
        std::cerr << "wipe-sim: " << e.what() << '\n';
        return caused_by_integrity(e) ? kExitIntegrity : kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "wipe-sim: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (cfg.output_path.empty())
            std::cout << wipe::csv::write(table);
        else
            wipe::csv::write_file(table, cfg.output_path);
    } catch (const std::exception& e) {
        std::cerr << "wipe-sim: " << e.what() << '\n';
        return 1;
    }

    if (!quiet && integrity.steps > 0) {
        std::fprintf(stderr,
                     "wipe-sim: %s, %zu rows; max |tr-1| %.2e, max |rho-rho^+| %.2e, "
                     "min eig %.2e, propagator unitarity %.2e\n",
                     wipe::to_string(cfg.scenario), table.rows(), integrity.max_trace_error,
                     integrity.max_hermiticity_error, integrity.min_eigenvalue,
                     integrity.propagator_unitarity_error);
    }
    return 0;
}
