// measures.hpp: Observables on the principal system: coherence, negativity,
// populations and matrix elements.

#pragma once

#include "wipe/linalg.hpp"
#include "wipe/state.hpp"

#include <algorithm>
#include <string>

namespace wipe {

inline constexpr double kNegativityNoiseFloor = -1e-10;

namespace measures {

/// |<0|rho|1>| of a 2×2 density matrix.
inline double coherence(const ComplexMatrix& rho1) {
    if (rho1.rows() != 2 || rho1.cols() != 2)
        throw DimensionError("coherence: expected a 2x2 density matrix");
    return std::abs(rho1(0, 1));
}

struct NegativityResult {
    double value{0.0};  // clamped at 0
    double raw{0.0};    // (||rho^T||_1 - 1)/2 before clamping
};

inline NegativityResult negativity_detailed(const ComplexMatrix& rho, const SubsystemDims& dims,
                                            std::size_t transpose_side = 1) {
    const ComplexMatrix pt = linalg::partial_transpose(rho, dims, transpose_side);
    const double raw = 0.5 * (linalg::trace_norm(0.5 * (pt + pt.adjoint())) - 1.0);
    if (raw < kNegativityNoiseFloor)
        throw std::runtime_error("negativity: raw value " + std::to_string(raw) +
                                 " below the numerical noise floor");
    return {std::max(raw, 0.0), raw};
}

inline double negativity(const ComplexMatrix& rho, const SubsystemDims& dims,
                         std::size_t transpose_side = 1) {
    return negativity_detailed(rho, dims, transpose_side).value;
}

/// Negativity across the spin0|spin1 cut after tracing out the bosonic modes.
/// Expects the joint layout (spin0 ⊗ spin1) ⊗ environment.
inline double negativity_spin_pair(const DensityMatrix& joint) {
    if (joint.dims.size() != 2 || joint.dims[0] != 4)
        throw DimensionError("negativity_spin_pair: expected dims {4, env}");
    const ComplexMatrix spins = linalg::partial_trace(joint.matrix, joint.dims, 0);
    return negativity(spins, SubsystemDims{2, 2});
}

}  // namespace measures

enum class ObservableKind {
    coherence_01,    // |<0|rho1|1>|
    negativity,      // across `split` of the principal system
    population,      // <k|rho1|k>
    matrix_element,  // <row|rho1|col>, complex
    joint_element,   // <row|rho|col> of the joint matrix, complex
};

struct ObservableSpec {
    ObservableKind kind{ObservableKind::coherence_01};
    std::size_t row{0};
    std::size_t col{0};
    SubsystemDims split{};
    std::size_t transpose_side{1};
    std::string name{};

    static ObservableSpec coherence_01(std::string label = "coherence") {
        return {ObservableKind::coherence_01, 0, 1, {}, 1, std::move(label)};
    }
    static ObservableSpec negativity(SubsystemDims split, std::string label = "negativity") {
        return {ObservableKind::negativity, 0, 0, std::move(split), 1, std::move(label)};
    }
    static ObservableSpec population(std::size_t k, std::string label = {}) {
        if (label.empty()) label = "population_" + std::to_string(k);
        return {ObservableKind::population, k, k, {}, 1, std::move(label)};
    }
    static ObservableSpec matrix_element(std::size_t i, std::size_t j, std::string label = {}) {
        if (label.empty()) label = "rho1_" + std::to_string(i) + std::to_string(j);
        return {ObservableKind::matrix_element, i, j, {}, 1, std::move(label)};
    }
    static ObservableSpec joint_element(std::size_t i, std::size_t j, std::string label = {}) {
        if (label.empty()) label = "rho_" + std::to_string(i) + "_" + std::to_string(j);
        return {ObservableKind::joint_element, i, j, {}, 1, std::move(label)};
    }
};

namespace measures {

inline void check_observable(const ObservableSpec& spec, const SubsystemDims& joint_dims) {
    const std::size_t principal = joint_dims[0];
    const std::size_t joint = joint_dims.total();
    switch (spec.kind) {
        case ObservableKind::coherence_01:
            if (principal != 2)
                throw DimensionError("observable " + spec.name + ": principal system is not a qubit");
            break;
        case ObservableKind::negativity:
            if (spec.split.size() != 2 || spec.split.total() != principal)
                throw DimensionError("observable " + spec.name + ": bipartition does not match");
            break;
        case ObservableKind::population:
        case ObservableKind::matrix_element:
            if (spec.row >= principal || spec.col >= principal)
                throw DimensionError("observable " + spec.name + ": index out of range");
            break;
        case ObservableKind::joint_element:
            if (spec.row >= joint || spec.col >= joint)
                throw DimensionError("observable " + spec.name + ": index out of range");
            break;
    }
}

/// Evaluates an observable. `reduced` is Tr_env of `joint`.
inline Complex evaluate(const ObservableSpec& spec, const ComplexMatrix& joint,
                        const ComplexMatrix& reduced) {
    const auto r = static_cast<Eigen::Index>(spec.row);
    const auto c = static_cast<Eigen::Index>(spec.col);
    switch (spec.kind) {
        case ObservableKind::coherence_01: return coherence(reduced);
        case ObservableKind::negativity:
            return negativity(reduced, spec.split, spec.transpose_side);
        case ObservableKind::population: return reduced(r, r).real();
        case ObservableKind::matrix_element: return reduced(r, c);
        case ObservableKind::joint_element: return joint(r, c);
    }
    return 0.0;
}

}  // namespace measures
}  // namespace wipe
