// models.hpp: Initial states, thermal states and Hamiltonians for the three
// systems: qubit–qubit, single spin–boson, and two spins with two modes.
//
// Frequencies are angular (rad/s) and enter exp(-iHt) unscaled. The thermal
// exponent is -hbar*H/(k_B*T).

#pragma once

#include "wipe/linalg.hpp"
#include "wipe/state.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wipe {

struct PhysicalConstants {
    static constexpr double k_B = 1.380649e-23;      // J/K
    static constexpr double hbar = 1.054571817e-34;  // J s
};

class ModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kThermalTailTol = 1e-12;

struct QubitQubitModel {
    double a{0.5};
    Complex b{0.5, 0.0};
    double c{1.0e3};

    void validate() const {
        if (!(a >= 0.0 && a <= 1.0))
            throw ModelError("qubit_qubit: population a must lie in [0, 1]");
        // small slack so that |b| = sqrt(a(1-a)) survives rounding
        if (std::abs(b) > std::sqrt(a * (1.0 - a)) * (1.0 + 1e-12) + 1e-15)
            throw ModelError("qubit_qubit: |b| exceeds sqrt(a(1-a))");
        if (!std::isfinite(c))
            throw ModelError("qubit_qubit: coupling must be finite");
    }
};

struct SpinBosonModel {
    double nu{3.4e10};
    double temperature{1.0e-3};
    double coupling{1.0e7};
    std::size_t truncation{8};

    // truncation and finiteness only; Hamiltonians are well defined for nu = 0
    void validate_structure() const;
    void validate() const;
};

struct TwoSpinTwoModeModel {
    double nu0{3.4e10};
    double nu1{4.87e7};
    double a01{1.0e7};
    double temperature{1.0e-6};
    double c0{1.0e7};
    double c1{1.0e7};
    std::size_t truncation0{4};
    std::size_t truncation1{4};

    void validate_structure() const;
    void validate() const;
};

namespace models {

/// Probability mass of a harmonic mode's Gibbs state beyond level n-1.
inline double thermal_tail_mass(double nu, double temperature, std::size_t n) {
    const double x = PhysicalConstants::hbar * nu / (PhysicalConstants::k_B * temperature);
    return std::exp(-x * static_cast<double>(n));
}

inline ComplexMatrix iz() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 0.5;
    m(1, 1) = -0.5;
    return m;
}

inline ComplexMatrix annihilation(std::size_t n) {
    if (n < 2) throw ModelError("annihilation: truncation must be at least 2");
    const auto N = static_cast<Eigen::Index>(n);
    ComplexMatrix a = ComplexMatrix::Zero(N, N);
    for (Eigen::Index k = 0; k + 1 < N; ++k)
        a(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
    return a;
}

inline ComplexMatrix number_operator(std::size_t n) {
    const ComplexMatrix a = annihilation(n);
    return a.adjoint() * a;
}

/// a + a^dagger on n Fock levels.
inline ComplexMatrix position_like(std::size_t n) {
    const ComplexMatrix a = annihilation(n);
    return a + a.adjoint();
}

/// Gibbs state exp(-hbar H / k_B T) / Z of a Hermitian h_env given in rad/s.
inline ComplexMatrix thermal_state(const ComplexMatrix& h_env, double temperature) {
    if (!(temperature > 0.0) || !std::isfinite(temperature))
        throw ModelError("thermal_state: temperature must be positive");
    const HermitianEigen eig = linalg::hermitian_eigen(h_env);
    const double beta_hbar =
        PhysicalConstants::hbar / (PhysicalConstants::k_B * temperature);
    const double shift = eig.eigenvalues.minCoeff();
    const Eigen::Index n = h_env.rows();
    Eigen::VectorXd weights(n);
    for (Eigen::Index k = 0; k < n; ++k)
        weights(k) = std::exp(-beta_hbar * (eig.eigenvalues(k) - shift));
    weights /= weights.sum();
    ComplexMatrix rho = eig.eigenvectors * weights.cast<Complex>().asDiagonal() *
                        eig.eigenvectors.adjoint();
    return 0.5 * (rho + rho.adjoint());
}

inline ComplexMatrix qubit_qubit_hamiltonian(const QubitQubitModel& m) {
    return m.c * linalg::tensor(iz(), iz());
}

inline ComplexMatrix maximally_mixed_qubit_environment() {
    return 0.5 * linalg::identity(2);
}

/// rho1(0) ⊗ I/2 with rho1(0) = [[a, b], [b*, 1-a]].
inline DensityMatrix qubit_initial_state(const QubitQubitModel& m) {
    m.validate();
    ComplexMatrix rho1(2, 2);
    rho1 << Complex(m.a, 0.0), m.b, std::conj(m.b), Complex(1.0 - m.a, 0.0);
    return make_density(linalg::tensor(rho1, maximally_mixed_qubit_environment()),
                        SubsystemDims{2, 2});
}

inline ComplexMatrix spin_boson_environment_hamiltonian(const SpinBosonModel& m) {
    return m.nu * number_operator(m.truncation);
}

/// nu Iz ⊗ 1 + 1 ⊗ nu a†a + c Iz ⊗ (a + a†), dims {2, N}.
inline ComplexMatrix spin_boson_hamiltonian(const SpinBosonModel& m) {
    m.validate_structure();
    const std::size_t n = m.truncation;
    return m.nu * linalg::tensor(iz(), linalg::identity(n)) +
           linalg::tensor(linalg::identity(2), spin_boson_environment_hamiltonian(m)) +
           m.coupling * linalg::tensor(iz(), position_like(n));
}

inline ComplexMatrix spin_boson_thermal_state(const SpinBosonModel& m) {
    m.validate();
    return thermal_state(spin_boson_environment_hamiltonian(m), m.temperature);
}

/// |+><+| ⊗ sigma, the spin starts in [[1/2, 1/2], [1/2, 1/2]].
inline DensityMatrix spin_boson_initial_state(const SpinBosonModel& m) {
    const ComplexMatrix plus = ComplexMatrix::Constant(2, 2, Complex(0.5, 0.0));
    return make_density(linalg::tensor(plus, spin_boson_thermal_state(m)),
                        SubsystemDims{2, m.truncation});
}

// Two spins and two modes. Layout spin0 ⊗ spin1 ⊗ mode0 ⊗ mode1, grouped as
// principal (spin0 ⊗ spin1, dim 4) and environment (mode0 ⊗ mode1).

inline ComplexMatrix two_spin_principal_hamiltonian(const TwoSpinTwoModeModel& m) {
    const ComplexMatrix I2 = linalg::identity(2);
    return m.nu0 * linalg::tensor(iz(), I2) + m.nu1 * linalg::tensor(I2, iz()) +
           m.a01 * linalg::tensor(iz(), iz());
}

inline ComplexMatrix two_spin_environment_hamiltonian(const TwoSpinTwoModeModel& m) {
    const ComplexMatrix I0 = linalg::identity(m.truncation0);
    const ComplexMatrix I1 = linalg::identity(m.truncation1);
    return m.nu0 * linalg::tensor(number_operator(m.truncation0), I1) +
           m.nu1 * linalg::tensor(I0, number_operator(m.truncation1));
}

inline SubsystemDims two_spin_dims(const TwoSpinTwoModeModel& m) {
    return SubsystemDims{4, m.truncation0 * m.truncation1};
}

inline ComplexMatrix two_spin_hamiltonian(const TwoSpinTwoModeModel& m) {
    m.validate_structure();
    const ComplexMatrix I2 = linalg::identity(2);
    const std::size_t env_dim = m.truncation0 * m.truncation1;
    const ComplexMatrix x0 =
        linalg::tensor(position_like(m.truncation0), linalg::identity(m.truncation1));
    const ComplexMatrix x1 =
        linalg::tensor(linalg::identity(m.truncation0), position_like(m.truncation1));
    return linalg::tensor(two_spin_principal_hamiltonian(m), linalg::identity(env_dim)) +
           linalg::tensor(linalg::identity(4), two_spin_environment_hamiltonian(m)) +
           m.c0 * linalg::tensor(linalg::tensor(iz(), I2), x0) +
           m.c1 * linalg::tensor(linalg::tensor(I2, iz()), x1);
}

inline ComplexMatrix two_spin_thermal_state(const TwoSpinTwoModeModel& m) {
    m.validate();
    return thermal_state(two_spin_environment_hamiltonian(m), m.temperature);
}

/// (|00> + |11>)(<00| + <11|) / 2.
inline ComplexMatrix bell_density() {
    ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    return bell;
}

inline DensityMatrix two_spin_initial_state(const TwoSpinTwoModeModel& m) {
    return make_density(linalg::tensor(bell_density(), two_spin_thermal_state(m)),
                        two_spin_dims(m));
}

}  // namespace models

inline void SpinBosonModel::validate_structure() const {
    if (!std::isfinite(nu) || !std::isfinite(coupling))
        throw ModelError("spin_boson: frequencies must be finite");
    if (truncation < 2) throw ModelError("spin_boson: truncation must be at least 2");
}

inline void SpinBosonModel::validate() const {
    validate_structure();
    if (!(nu > 0.0)) throw ModelError("spin_boson: nu must be positive");
    if (!(temperature > 0.0) || !std::isfinite(temperature))
        throw ModelError("spin_boson: temperature must be positive");
    if (models::thermal_tail_mass(nu, temperature, truncation) >= kThermalTailTol)
        throw ModelError("spin_boson: thermal population beyond truncation " +
                         std::to_string(truncation) + " is not negligible");
}

inline void TwoSpinTwoModeModel::validate_structure() const {
    if (!std::isfinite(nu0) || !std::isfinite(nu1) || !std::isfinite(a01) ||
        !std::isfinite(c0) || !std::isfinite(c1))
        throw ModelError("two_spin: frequencies must be finite");
    if (truncation0 < 2 || truncation1 < 2)
        throw ModelError("two_spin: truncations must be at least 2");
}

inline void TwoSpinTwoModeModel::validate() const {
    validate_structure();
    if (!(nu0 > 0.0) || !(nu1 > 0.0))
        throw ModelError("two_spin: frequencies must be positive");
    if (!(temperature > 0.0) || !std::isfinite(temperature))
        throw ModelError("two_spin: temperature must be positive");
    if (models::thermal_tail_mass(nu0, temperature, truncation0) >= kThermalTailTol ||
        models::thermal_tail_mass(nu1, temperature, truncation1) >= kThermalTailTol)
        throw ModelError("two_spin: thermal population beyond truncation is not negligible");
}

}  // namespace wipe
