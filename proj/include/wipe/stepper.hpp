// stepper.hpp: Evolution under unitary dynamics with probabilistic replacement
// of the environment factor by a fixed thermal state.
//
// One step of length dt:
//   rho <- U [ w rho + (1 - w) Tr_env(rho) ⊗ sigma ] U†,   U = exp(-i H dt),
// with w = (1-p)^{dt/tau} the probability that the environment survives the step.

#pragma once

#include "wipe/linalg.hpp"
#include "wipe/measures.hpp"
#include "wipe/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace wipe {

/// Raised when the trajectory stops being a valid density matrix.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kTraceDriftAbort = 1e-9;
inline constexpr double kUnitarityTol = 1e-10;
inline constexpr std::size_t kMaxSamples = 4001;

struct SimulationParams {
    double p{0.0};
    double tau{1e-3};
    double dt{1e-6};
    std::size_t steps{0};
    std::size_t record_every{0};  // 0 selects the default (<= 4001 samples)

    double total_time() const { return static_cast<double>(steps) * dt; }

    void validate() const {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("SimulationParams: p must lie in [0, 1]");
        if (!(tau > 0.0)) throw std::invalid_argument("SimulationParams: tau must be positive");
        if (!(dt > 0.0 && dt <= tau))
            throw std::invalid_argument("SimulationParams: need 0 < dt <= tau");
    }
};

/// Smallest stride that keeps a run of `steps` steps within kMaxSamples samples.
inline std::size_t default_record_every(std::size_t steps) {
    const std::size_t intervals = kMaxSamples - 1;
    return std::max<std::size_t>(1, (steps + intervals - 1) / intervals);
}

/// Per-step survival weight x^dt = (1-p)^{dt/tau}; exactly 0 for p = 1.
inline double replacement_weight(double p, double tau, double dt) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("replacement_weight: p must lie in [0, 1]");
    if (!(tau > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("replacement_weight: tau and dt must be positive");
    if (p == 1.0) return 0.0;
    const double ln_x = std::log1p(-p) / tau;
    return std::exp(ln_x * dt);
}

struct StepperState {
    DensityMatrix rho;        // joint, dims {principal, environment}
    ComplexMatrix propagator; // exp(-i H dt)
    ComplexMatrix sigma;      // environment replacement state
    double weight{1.0};       // x^dt
};

inline double unitarity_error(const ComplexMatrix& U) {
    return linalg::max_abs(U * U.adjoint() - linalg::identity(static_cast<std::size_t>(U.rows())));
}

namespace stepper {

/// rho <- U [w rho + (1-w) Tr_env(rho) ⊗ sigma] U†, with U† supplied by the caller.
inline ComplexMatrix apply(const ComplexMatrix& rho, const SubsystemDims& dims,
                           const ComplexMatrix& U, const ComplexMatrix& U_dag,
                           const ComplexMatrix& sigma, double w) {
    ComplexMatrix mixed;
    if (w == 1.0) {
        mixed = rho;
    } else {
        mixed = (1.0 - w) * linalg::tensor(linalg::partial_trace(rho, dims, 0), sigma);
        if (w != 0.0) mixed += w * rho;
    }
    return U * mixed * U_dag;
}

inline void check_state(const StepperState& s) {
    if (s.rho.dims.size() != 2)
        throw DimensionError("step: joint state must be bipartite");
    if (static_cast<std::size_t>(s.sigma.rows()) != s.rho.dims[1] ||
        s.sigma.rows() != s.sigma.cols())
        throw DimensionError("step: sigma does not match the environment dimension");
    if (s.propagator.rows() != s.rho.matrix.rows() || s.propagator.cols() != s.rho.matrix.cols())
        throw DimensionError("step: propagator does not match the joint dimension");
    if (!(s.weight >= 0.0 && s.weight <= 1.0))
        throw std::invalid_argument("step: weight must lie in [0, 1]");
}

}  // namespace stepper

/// One step of the replacement-then-unitary map.
inline StepperState step(const StepperState& s) {
    stepper::check_state(s);
    StepperState next = s;
    next.rho.matrix = stepper::apply(s.rho.matrix, s.rho.dims, s.propagator,
                                     s.propagator.adjoint(), s.sigma, s.weight);
    return next;
}

inline StepperState make_stepper_state(const ComplexMatrix& H, DensityMatrix rho0,
                                       ComplexMatrix sigma, const SimulationParams& params) {
    params.validate();
    if (H.rows() != rho0.matrix.rows())
        throw DimensionError("stepper: Hamiltonian and state dimensions differ");
    StepperState s{std::move(rho0), linalg::unitary_exp(H, params.dt), std::move(sigma),
                   replacement_weight(params.p, params.tau, params.dt)};
    stepper::check_state(s);
    const double u_err = unitarity_error(s.propagator);
    if (u_err > kUnitarityTol)
        throw IntegrityError("stepper: propagator unitarity error " + std::to_string(u_err));
    return s;
}

struct TimeSeries {
    std::string name;
    std::vector<double> times;
    std::vector<Complex> values;
};

/// Worst-case deviations observed over a run.
struct IntegrityReport {
    double max_trace_error{0.0};        // |Tr rho - 1| after any step
    double max_hermiticity_error{0.0};  // max |rho - rho†| after any step
    double min_eigenvalue{std::numeric_limits<double>::infinity()};  // at recorded times
    double propagator_unitarity_error{0.0};
    std::size_t steps{0};
};

struct RunOptions {
    bool track_hermiticity{true};
    bool track_min_eigenvalue{true};
};

struct RunResult {
    std::vector<TimeSeries> series;  // one per observable, same order
    IntegrityReport integrity;
};

/// Iterates the map for params.steps steps, sampling each observable every
/// record_every steps (t = 0 included). Aborts with IntegrityError when the
/// trace drifts by more than kTraceDriftAbort; nothing is renormalized.
inline RunResult run(const ComplexMatrix& H, const DensityMatrix& rho0, const ComplexMatrix& sigma,
                     const SimulationParams& params,
                     const std::vector<ObservableSpec>& observables,
                     const RunOptions& options = {}) {
    linalg::require_hermitian(H, "run");
    for (const auto& obs : observables) measures::check_observable(obs, rho0.dims);

    StepperState state = make_stepper_state(H, rho0, sigma, params);
    const ComplexMatrix U_dag = state.propagator.adjoint();
    const std::size_t stride =
        params.record_every == 0 ? default_record_every(params.steps) : params.record_every;

    RunResult result;
    result.integrity.propagator_unitarity_error = unitarity_error(state.propagator);
    result.series.reserve(observables.size());
    const std::size_t samples = params.steps / stride + 1;
    for (const auto& obs : observables) {
        TimeSeries ts{obs.name, {}, {}};
        ts.times.reserve(samples);
        ts.values.reserve(samples);
        result.series.push_back(std::move(ts));
    }

    ComplexMatrix rho = state.rho.matrix;
    const SubsystemDims& dims = state.rho.dims;

    auto record = [&](std::size_t m) {
        const double t = static_cast<double>(m) * params.dt;
        const ComplexMatrix reduced = linalg::partial_trace(rho, dims, 0);
        for (std::size_t k = 0; k < observables.size(); ++k) {
            result.series[k].times.push_back(t);
            result.series[k].values.push_back(measures::evaluate(observables[k], rho, reduced));
        }
        if (options.track_min_eigenvalue) {
            const double lo = linalg::hermitian_eigenvalues(0.5 * (rho + rho.adjoint())).minCoeff();
            result.integrity.min_eigenvalue = std::min(result.integrity.min_eigenvalue, lo);
        }
    };

    record(0);
    for (std::size_t m = 1; m <= params.steps; ++m) {
        rho = stepper::apply(rho, dims, state.propagator, U_dag, state.sigma, state.weight);

        const double trace_err = std::abs(rho.trace() - Complex(1.0, 0.0));
        result.integrity.max_trace_error = std::max(result.integrity.max_trace_error, trace_err);
        if (!(trace_err <= kTraceDriftAbort))
            throw IntegrityError("run: trace drifted by " + std::to_string(trace_err) +
                                 " at step " + std::to_string(m));
        if (options.track_hermiticity)
            result.integrity.max_hermiticity_error =
                std::max(result.integrity.max_hermiticity_error, linalg::hermiticity_error(rho));

        if (m % stride == 0) record(m);
    }
    result.integrity.steps = params.steps;
    return result;
}

}  // namespace wipe
