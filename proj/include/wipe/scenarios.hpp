// scenarios.hpp: The named experiments: decoherence-factor curves, the
// qubit–qubit coherence envelope, spin–boson coherence and two-spin negativity.

#pragma once

#include "wipe/analytic_qubit.hpp"
#include "wipe/config.hpp"
#include "wipe/measures.hpp"
#include "wipe/models.hpp"
#include "wipe/stepper.hpp"
#include "wipe/sweep.hpp"
#include "wipe/table.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace wipe {

namespace scenarios {

/// Folds one trajectory's report into an aggregate.
inline void merge(IntegrityReport& into, const IntegrityReport& from) {
    into.max_trace_error = std::max(into.max_trace_error, from.max_trace_error);
    into.max_hermiticity_error = std::max(into.max_hermiticity_error, from.max_hermiticity_error);
    into.min_eigenvalue = std::min(into.min_eigenvalue, from.min_eigenvalue);
    into.propagator_unitarity_error =
        std::max(into.propagator_unitarity_error, from.propagator_unitarity_error);
    into.steps = std::max(into.steps, from.steps);
}

inline SimulationParams simulation_params(const ScenarioConfig& cfg, double p) {
    return SimulationParams{p, cfg.tau, cfg.dt, cfg.steps(), cfg.record_every};
}

inline std::vector<double> sample_times(const ScenarioConfig& cfg) {
    const std::size_t steps = cfg.steps();
    const std::size_t stride = cfg.record_every ? cfg.record_every : default_record_every(steps);
    std::vector<double> t;
    for (std::size_t m = 0; m <= steps; m += stride) t.push_back(static_cast<double>(m) * cfg.dt);
    return t;
}

struct Column {
    std::vector<double> values;
    IntegrityReport integrity;
};

inline std::vector<double> magnitudes(const TimeSeries& ts) {
    std::vector<double> out(ts.values.size());
    std::transform(ts.values.begin(), ts.values.end(), out.begin(),
                   [](Complex z) { return std::abs(z); });
    return out;
}

inline ResultTable assemble(const std::vector<double>& times, const std::vector<double>& p_list,
                            std::vector<Column>& columns, const std::string& suffix,
                            IntegrityReport* integrity, ResultTable table = {}) {
    if (table.cols() == 0) table.add_column("t", times);
    for (std::size_t k = 0; k < p_list.size(); ++k) {
        table.add_column(config::p_label(p_list[k]) + suffix, std::move(columns[k].values));
        if (integrity) merge(*integrity, columns[k].integrity);
    }
    return table;
}

}  // namespace scenarios

/// Columns -ln x / c, Re r+/c, Re r-/c, Im r+/c, Im r-/c. Scale free in c.
inline ResultTable run_factors_curve(const ScenarioConfig& cfg) {
    cfg.validate();
    const double c = scaled_qubit_model(cfg).c;
    const std::size_t n = cfg.grid_points;
    std::vector<double> x(n), re_p(n), re_m(n), im_p(n), im_m(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double y = k + 1 == n ? cfg.grid_max
                                    : cfg.grid_min + (cfg.grid_max - cfg.grid_min) *
                                                         static_cast<double>(k) /
                                                         static_cast<double>(n - 1);
        const DecoherenceFactors r = analytic::decoherence_factors(-y * c, c);
        x[k] = y;
        re_p[k] = r.r_plus.real() / c;
        re_m[k] = r.r_minus.real() / c;
        im_p[k] = r.r_plus.imag() / c;
        im_m[k] = r.r_minus.imag() / c;
    }
    ResultTable table;
    table.add_column("neg_ln_x_over_c", std::move(x));
    table.add_column("re_r_plus_over_c", std::move(re_p));
    table.add_column("re_r_minus_over_c", std::move(re_m));
    table.add_column("im_r_plus_over_c", std::move(im_p));
    table.add_column("im_r_minus_over_c", std::move(im_m));
    return table;
}

/// |eta(t)| per p from the closed form, the matrix stepper, or both.
inline ResultTable run_qubit_qubit(const ScenarioConfig& cfg, IntegrityReport* integrity = nullptr) {
    cfg.validate();
    const QubitQubitModel model = scaled_qubit_model(cfg);
    const std::vector<double> times = scenarios::sample_times(cfg);

    auto analytic_column = [&](double p) {
        const DecoherenceFactors r = analytic::decoherence_factors(p, cfg.tau, model.c);
        scenarios::Column col;
        col.values.reserve(times.size());
        for (double t : times) col.values.push_back(std::abs(analytic::eta(t, model.b, r)));
        return col;
    };
    auto numeric_column = [&](double p) {
        const RunResult res = run(models::qubit_qubit_hamiltonian(model),
                                  models::qubit_initial_state(model),
                                  models::maximally_mixed_qubit_environment(),
                                  scenarios::simulation_params(cfg, p),
                                  {ObservableSpec::matrix_element(0, 1, "eta")});
        return scenarios::Column{scenarios::magnitudes(res.series.front()), res.integrity};
    };

    ResultTable table;
    if (cfg.mode == Mode::analytic || cfg.mode == Mode::both) {
        auto cols = sweep_map(cfg.p_list, analytic_column, cfg.threads);
        table = scenarios::assemble(times, cfg.p_list, cols,
                                    cfg.mode == Mode::both ? ":analytic" : "", integrity);
    }
    if (cfg.mode == Mode::numeric || cfg.mode == Mode::both) {
        auto cols = sweep_map(cfg.p_list, numeric_column, cfg.threads);
        table = scenarios::assemble(times, cfg.p_list, cols,
                                    cfg.mode == Mode::both ? ":numeric" : "", integrity,
                                    std::move(table));
    }
    return table;
}

/// |<0|rho1(t)|1>| per p for a spin coupled to one bosonic mode.
inline ResultTable run_spin_boson(const ScenarioConfig& cfg, IntegrityReport* integrity = nullptr) {
    cfg.validate();
    const SpinBosonModel model = scaled_spin_boson_model(cfg);
    const ComplexMatrix H = models::spin_boson_hamiltonian(model);
    const DensityMatrix rho0 = models::spin_boson_initial_state(model);
    const ComplexMatrix sigma = models::spin_boson_thermal_state(model);

    auto column = [&](double p) {
        const RunResult res = run(H, rho0, sigma, scenarios::simulation_params(cfg, p),
                                  {ObservableSpec::coherence_01()});
        return scenarios::Column{scenarios::magnitudes(res.series.front()), res.integrity};
    };
    auto cols = sweep_map(cfg.p_list, column, cfg.threads);
    return scenarios::assemble(scenarios::sample_times(cfg), cfg.p_list, cols, "", integrity);
}

/// Negativity of the electron–nucleus pair per p, bosonic modes traced out.
inline ResultTable run_two_spin_negativity(const ScenarioConfig& cfg,
                                           IntegrityReport* integrity = nullptr) {
    cfg.validate();
    const TwoSpinTwoModeModel model = scaled_two_spin_model(cfg);
    const ComplexMatrix H = models::two_spin_hamiltonian(model);
    const DensityMatrix rho0 = models::two_spin_initial_state(model);
    const ComplexMatrix sigma = models::two_spin_thermal_state(model);

    auto column = [&](double p) {
        const RunResult res = run(H, rho0, sigma, scenarios::simulation_params(cfg, p),
                                  {ObservableSpec::negativity(SubsystemDims{2, 2})});
        return scenarios::Column{scenarios::magnitudes(res.series.front()), res.integrity};
    };
    auto cols = sweep_map(cfg.p_list, column, cfg.threads);
    return scenarios::assemble(scenarios::sample_times(cfg), cfg.p_list, cols, "", integrity);
}

/// Runs whichever scenario the config names.
inline ResultTable sweep(const ScenarioConfig& cfg, IntegrityReport* integrity = nullptr) {
    switch (cfg.scenario) {
        case Scenario::factors_curve: return run_factors_curve(cfg);
        case Scenario::qubit_qubit: return run_qubit_qubit(cfg, integrity);
        case Scenario::spin_boson: return run_spin_boson(cfg, integrity);
        case Scenario::two_spin_negativity: return run_two_spin_negativity(cfg, integrity);
    }
    throw ConfigError("unknown scenario");
}

}  // namespace wipe
