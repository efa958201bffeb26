// state.hpp: Density matrices with subsystem annotation and validity checks

#pragma once

#include "wipe/linalg.hpp"

#include <stdexcept>
#include <string>

namespace wipe {

class InvalidStateError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct DensityDiagnostics {
    double trace_error{0.0};        // |Tr rho - 1|
    double hermiticity_error{0.0};  // max |rho - rho^dagger|
    double min_eigenvalue{0.0};
};

/// Joint density matrix together with its tensor-factor dimensions.
struct DensityMatrix {
    ComplexMatrix matrix;
    SubsystemDims dims;

    std::size_t dim() const { return static_cast<std::size_t>(matrix.rows()); }
};

inline DensityDiagnostics diagnose(const ComplexMatrix& rho) {
    DensityDiagnostics d;
    d.trace_error = std::abs(rho.trace() - Complex(1.0, 0.0));
    d.hermiticity_error = linalg::hermiticity_error(rho);
    const ComplexMatrix sym = 0.5 * (rho + rho.adjoint());
    d.min_eigenvalue = linalg::hermitian_eigenvalues(sym).minCoeff();
    return d;
}

struct DensityTolerances {
    double trace{1e-12};
    double hermiticity{1e-12};
    double min_eigenvalue{-1e-10};
};

/// Builds a DensityMatrix, rejecting anything that is not a valid state.
inline DensityMatrix make_density(ComplexMatrix rho, SubsystemDims dims,
                                  const DensityTolerances& tol = {}) {
    linalg::require_square(rho, "make_density");
    if (dims.size() == 0)
        dims = SubsystemDims{static_cast<std::size_t>(rho.rows())};
    if (dims.total() != static_cast<std::size_t>(rho.rows()))
        throw DimensionError("make_density: subsystem dims do not match matrix dimension");
    if (!linalg::all_finite(rho))
        throw InvalidStateError("make_density: non-finite entry");
    const DensityDiagnostics d = diagnose(rho);
    if (d.trace_error > tol.trace)
        throw InvalidStateError("make_density: trace differs from 1 by " +
                                std::to_string(d.trace_error));
    if (d.hermiticity_error > tol.hermiticity)
        throw InvalidStateError("make_density: not Hermitian");
    if (d.min_eigenvalue < tol.min_eigenvalue)
        throw InvalidStateError("make_density: negative eigenvalue " +
                                std::to_string(d.min_eigenvalue));
    return {std::move(rho), std::move(dims)};
}

}  // namespace wipe
