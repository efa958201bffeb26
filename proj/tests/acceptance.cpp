// acceptance.cpp: End-to-end checks, one PASS/FAIL line per criterion.
//
// Exit status is the number of failing criteria (0 when all pass).

#include "wipe/wipe.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace wipe;

namespace {

struct Outcome {
    bool pass{true};
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        if (!detail.empty()) detail += "; ";
        detail += (ok ? "" : "!") + what;
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

IntegrityReport g_integrity;  // accumulated across every simulated trajectory

const std::vector<double> kQubitP{0.0, 0.25, 0.5, 0.75, 0.95, 1.0};

Outcome recurrence_exactness() {
    const QubitQubitModel m{0.5, 0.5, 1000.0};
    const double tau = 1e-3, dt = 1e-6;
    const std::size_t steps = 20000;
    const std::vector<ObservableSpec> fg{ObservableSpec::joint_element(0, 2, "f"),
                                         ObservableSpec::joint_element(1, 3, "g")};
    double worst = 0.0;
    for (double p : kQubitP) {
        const RunResult res = run(models::qubit_qubit_hamiltonian(m), models::qubit_initial_state(m),
                                  models::maximally_mixed_qubit_environment(),
                                  SimulationParams{p, tau, dt, steps, 1}, fg);
        scenarios::merge(g_integrity, res.integrity);
        const auto ref = analytic::recurrence_oracle(steps, m.b, m.c, analytic::log_rate(p, tau), dt);
        for (std::size_t k = 0; k <= steps; ++k) {
            worst = std::max(worst, std::abs(res.series[0].values[k] - ref[k].f));
            worst = std::max(worst, std::abs(res.series[1].values[k] - ref[k].g));
        }
    }
    Outcome o;
    o.require(worst <= 1e-12, "max |stepper - recurrence| " + fmt("%.2e", worst) + " <= 1e-12");
    return o;
}

double qubit_max_deviation(double dt) {
    ScenarioConfig cfg = default_config(Scenario::qubit_qubit);
    cfg.dt = dt;
    cfg.mode = Mode::both;
    cfg.record_every = 1;
    IntegrityReport rep;
    const ResultTable t = sweep(cfg, &rep);
    scenarios::merge(g_integrity, rep);
    double worst = 0.0;
    for (double p : cfg.p_list) {
        const auto& a = t.column(config::p_label(p) + ":analytic");
        const auto& n = t.column(config::p_label(p) + ":numeric");
        for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - n[i]));
    }
    return worst;
}

Outcome convergence() {
    const double e1 = qubit_max_deviation(1e-6);
    const double e2 = qubit_max_deviation(5e-7);
    const double ratio = e1 / e2;
    Outcome o;
    o.require(e1 <= 2e-3, "max ||eta_num| - |eta_cf|| " + fmt("%.3e", e1) + " <= 2e-3");
    o.require(ratio >= 1.8 && ratio <= 2.2, "halving ratio " + fmt("%.4f", ratio) + " in [1.8, 2.2]");
    return o;
}

Outcome factor_curves() {
    const ResultTable t = sweep(default_config(Scenario::factors_curve));
    const auto& y = t.column("neg_ln_x_over_c");
    const auto& rp = t.column("re_r_plus_over_c");
    const auto& rm = t.column("re_r_minus_over_c");
    const auto& ip = t.column("im_r_plus_over_c");
    const auto& im = t.column("im_r_minus_over_c");
    const double tol = 1e-10;
    double below = 0.0, imag = 0.0, at_critical = 1.0;
    bool monotone = true;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] <= 1.0) {
            below = std::max({below, std::abs(rp[i] - y[i] / 2), std::abs(rm[i] - y[i] / 2)});
        }
        if (y[i] >= 1.0) imag = std::max({imag, std::abs(ip[i]), std::abs(im[i])});
        if (y[i] == 1.0) at_critical = std::max(std::abs(rp[i] - 0.5), std::abs(rm[i] - 0.5));
        if (i > 0 && y[i - 1] >= 1.0 && !(rp[i] < rp[i - 1] && rm[i] > rm[i - 1])) monotone = false;
    }
    Outcome o;
    o.require(y.size() == 601, std::to_string(y.size()) + " grid points");
    o.require(below <= tol, "Re r/c = -ln x/2c below c, dev " + fmt("%.1e", below));
    o.require(at_critical <= tol, "Re r/c = 0.5 at -ln x = c, dev " + fmt("%.1e", at_critical));
    o.require(monotone, "Re r+ decreasing, Re r- increasing beyond");
    o.require(imag <= tol, "Im r = 0 beyond, max " + fmt("%.1e", imag));
    return o;
}

Outcome qubit_figure() {
    ScenarioConfig cfg = default_config(Scenario::qubit_qubit);
    cfg.mode = Mode::both;
    IntegrityReport rep;
    const ResultTable t = sweep(cfg, &rep);
    scenarios::merge(g_integrity, rep);
    const auto& time = t.columns[0];
    const double c = cfg.qubit.c;

    double drift_a = 0.0, drift_n = 0.0, cos_n = 0.0;
    for (std::size_t i = 0; i < time.size(); ++i) {
        drift_a = std::max(drift_a, std::abs(t.column("p=1:analytic")[i] - 0.5));
        drift_n = std::max(drift_n, std::abs(t.column("p=1:numeric")[i] - 0.5));
        cos_n = std::max(cos_n,
                         std::abs(t.column("p=0:numeric")[i] - std::abs(0.5 * std::cos(c * time[i] / 2))));
    }

    const double t_check = 0.01;
    std::size_t row = 0;
    while (row + 1 < time.size() && time[row] < t_check - 1e-12) ++row;
    bool ordered = true;
    std::string order = "order at t=" + fmt("%.3g", time[row]) + ":";
    for (const char* path : {":analytic", ":numeric"}) {
        double prev = 1.0;
        for (double p : {1.0, 0.95, 0.75, 0.5}) {
            const double v = t.column(config::p_label(p) + path)[row];
            if (!(v < prev)) ordered = false;
            prev = v;
            if (std::string(path) == ":analytic") order += " " + fmt("%.4f", v);
        }
    }
    Outcome o;
    o.require(drift_a <= 1e-9, "p=1 analytic drift " + fmt("%.1e", drift_a) + " <= 1e-9");
    o.require(drift_n <= 1e-4, "p=1 numeric drift " + fmt("%.2e", drift_n) + " <= 1e-4");
    o.require(cos_n <= 1e-3, "p=0 numeric vs |0.5 cos(ct/2)| " + fmt("%.1e", cos_n) + " <= 1e-3");
    o.require(ordered, order);
    return o;
}

Outcome spin_boson_wipe() {
    ScenarioConfig cfg = default_config(Scenario::spin_boson);
    cfg.record_every = 1;
    IntegrityReport rep;
    const ResultTable t8 = sweep(cfg, &rep);
    scenarios::merge(g_integrity, rep);
    cfg.spin_boson.truncation = 10;
    const ResultTable t10 = sweep(cfg, &rep);
    scenarios::merge(g_integrity, rep);

    double trunc = 0.0;
    for (std::size_t k = 1; k < t8.cols(); ++k)
        for (std::size_t i = 0; i < t8.rows(); ++i)
            trunc = std::max(trunc, std::abs(t8.columns[k][i] - t10.columns[k][i]));

    const double v99 = t8.column("p=0.99").back(), v50 = t8.column("p=0.5").back();
    const auto& v0 = t8.column("p=0");
    double lowest_min = INFINITY;
    for (std::size_t i = 1; i + 1 < v0.size(); ++i)
        if (v0[i] < v0[i - 1] && v0[i] <= v0[i + 1]) lowest_min = std::min(lowest_min, v0[i]);

    Outcome o;
    o.require(v99 > v50, "value(p=0.99) " + fmt("%.9f", v99) + " > value(p=0.5) " + fmt("%.9f", v50));
    o.require(lowest_min < 0.45, "p=0 lowest local min " + fmt("%.9f", lowest_min) + " < 0.45");
    o.require(trunc <= 1e-10, "truncation 8 vs 10 " + fmt("%.1e", trunc) + " <= 1e-10");
    return o;
}

Outcome negativity_wipe() {
    ScenarioConfig cfg = default_config(Scenario::two_spin_negativity);
    cfg.record_every = 1;
    IntegrityReport rep;
    const ResultTable t = sweep(cfg, &rep);
    scenarios::merge(g_integrity, rep);
    double initial = 0.0, lo = INFINITY, hi = -INFINITY;
    for (std::size_t k = 1; k < t.cols(); ++k) {
        initial = std::max(initial, std::abs(t.columns[k].front() - 0.5));
        for (double v : t.columns[k]) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    const double n95 = t.column("p=0.95").back(), n50 = t.column("p=0.5").back();
    Outcome o;
    o.require(initial <= 1e-10, "negativity(0) = 0.5, dev " + fmt("%.1e", initial));
    o.require(n95 > n50, "N(p=0.95) " + fmt("%.6f", n95) + " > N(p=0.5) " + fmt("%.6f", n50));
    o.require(lo >= 0.0 && hi <= 0.5 + 1e-9, "range [" + fmt("%.4f", lo) + ", " + fmt("%.12f", hi) + "]");
    return o;
}

Outcome measure_units() {
    const ComplexMatrix bell = models::bell_density();
    ComplexMatrix up = ComplexMatrix::Zero(2, 2), plus = ComplexMatrix::Constant(2, 2, 0.5);
    up(0, 0) = 1.0;
    const ComplexMatrix product = linalg::tensor(up, plus);
    const ComplexMatrix werner = bell / 3.0 + (2.0 / 3.0) * linalg::identity(4) / 4.0;
    const double nb = measures::negativity(bell, {2, 2});
    const double np = measures::negativity(product, {2, 2});
    const double nw = measures::negativity(werner, {2, 2});
    Outcome o;
    o.require(std::abs(nb - 0.5) <= 1e-10, "Bell " + fmt("%.12f", nb));
    o.require(std::abs(np) <= 1e-10, "product " + fmt("%.1e", np));
    o.require(std::abs(nw) <= 1e-10, "Werner(1/3) " + fmt("%.1e", nw));
    return o;
}

Outcome integrity() {
    const IntegrityReport& r = g_integrity;
    Outcome o;
    o.require(r.steps > 0, "trajectories checked");
    o.require(r.max_trace_error <= 1e-12, "max |tr-1| " + fmt("%.1e", r.max_trace_error));
    o.require(r.max_hermiticity_error <= 1e-12,
              "max |rho-rho^+| " + fmt("%.1e", r.max_hermiticity_error));
    o.require(r.min_eigenvalue >= -1e-10, "min eigenvalue " + fmt("%.1e", r.min_eigenvalue));
    o.require(r.propagator_unitarity_error <= 1e-10,
              "unitarity " + fmt("%.1e", r.propagator_unitarity_error));
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double time_limit;  // seconds, 0 for none
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "recurrence exactness", 5.0, recurrence_exactness},
        {2, "analytic-numeric convergence", 10.0, convergence},
        {3, "decoherence factor curves", 1.0, factor_curves},
        {4, "qubit-qubit coherence", 10.0, qubit_figure},
        {5, "spin-boson wipe effect", 30.0, spin_boson_wipe},
        {6, "negativity wipe effect", 60.0, negativity_wipe},
        {7, "measure unit values", 1.0, measure_units},
        {8, "CPTP integrity", 0.0, integrity},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0) o.require(secs < c.time_limit, fmt("%.2f s", secs) + " < " + fmt("%g s", c.time_limit));
        if (!o.pass) ++failures;
        std::printf("%s  %d %-30s %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
