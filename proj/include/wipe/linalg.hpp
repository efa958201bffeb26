// linalg.hpp: Dense complex linear algebra for density matrices and propagators
//
// Tensor layout convention: for dims {d0, d1} the joint index is i0 * d1 + i1
// (big-endian, leftmost factor varies slowest). Factor 0 is the principal
// system, factor 1 the environment.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wipe {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-10;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonHermitianError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Dimensions of the tensor factors annotating a joint matrix.
struct SubsystemDims {
    std::vector<std::size_t> dims;

    SubsystemDims() = default;
    SubsystemDims(std::initializer_list<std::size_t> d) : dims(d) {}
    explicit SubsystemDims(std::vector<std::size_t> d) : dims(std::move(d)) {}

    std::size_t total() const {
        return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                               std::multiplies<>{});
    }
    std::size_t size() const { return dims.size(); }
    std::size_t operator[](std::size_t k) const { return dims.at(k); }
    bool operator==(const SubsystemDims&) const = default;
};

struct HermitianEigen {
    RealVector eigenvalues;       // ascending
    ComplexMatrix eigenvectors;   // columns
};

namespace linalg {

inline ComplexMatrix identity(std::size_t n) {
    return ComplexMatrix::Identity(static_cast<Eigen::Index>(n),
                                   static_cast<Eigen::Index>(n));
}

inline void require_square(const ComplexMatrix& A, const char* what) {
    if (A.rows() != A.cols() || A.rows() < 1)
        throw DimensionError(std::string(what) + ": matrix must be square and non-empty");
}

inline bool all_finite(const ComplexMatrix& A) {
    for (Eigen::Index j = 0; j < A.cols(); ++j)
        for (Eigen::Index i = 0; i < A.rows(); ++i)
            if (!std::isfinite(A(i, j).real()) || !std::isfinite(A(i, j).imag()))
                return false;
    return true;
}

/// max |A - A†| over entries.
inline double hermiticity_error(const ComplexMatrix& A) {
    require_square(A, "hermiticity_error");
    double err = 0.0;
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = i; j < A.cols(); ++j)
            err = std::max(err, std::abs(A(i, j) - std::conj(A(j, i))));
    return err;
}

inline void require_hermitian(const ComplexMatrix& A, const char* what,
                              double tol = kHermitianTol) {
    require_square(A, what);
    const double err = hermiticity_error(A);
    if (!(err <= tol))
        throw NonHermitianError(std::string(what) + ": max |A - A^dagger| = " +
                                std::to_string(err) + " exceeds tolerance");
}

inline double max_abs(const ComplexMatrix& A) {
    return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

inline ComplexMatrix matmul(const ComplexMatrix& A, const ComplexMatrix& B) {
    require_square(A, "matmul");
    require_square(B, "matmul");
    if (A.rows() != B.rows())
        throw DimensionError("matmul: dimension mismatch " + std::to_string(A.rows()) +
                             " vs " + std::to_string(B.rows()));
    return A * B;
}

inline ComplexMatrix adjoint(const ComplexMatrix& A) { return A.adjoint(); }

/// Kronecker product A ⊗ B; A indexes the slow (principal) factor.
inline ComplexMatrix tensor(const ComplexMatrix& A, const ComplexMatrix& B) {
    const Eigen::Index ra = A.rows(), ca = A.cols(), rb = B.rows(), cb = B.cols();
    ComplexMatrix out(ra * rb, ca * cb);
    for (Eigen::Index i = 0; i < ra; ++i)
        for (Eigen::Index j = 0; j < ca; ++j)
            out.block(i * rb, j * cb, rb, cb) = A(i, j) * B;
    return out;
}

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending.
inline HermitianEigen hermitian_eigen(const ComplexMatrix& A) {
    require_hermitian(A, "hermitian_eigen");
    // Symmetrize so the solver sees an exactly Hermitian input.
    const ComplexMatrix sym = 0.5 * (A + A.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigen: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

inline RealVector hermitian_eigenvalues(const ComplexMatrix& A) {
    require_hermitian(A, "hermitian_eigenvalues");
    const ComplexMatrix sym = 0.5 * (A + A.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
    return solver.eigenvalues();
}

/// exp(-i H t) through the spectral decomposition of H (H in rad/s, t in s).
inline ComplexMatrix unitary_exp(const ComplexMatrix& H, double t) {
    const HermitianEigen eig = hermitian_eigen(H);
    const Eigen::Index n = H.rows();
    Eigen::VectorXcd phases(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double angle = -eig.eigenvalues(k) * t;
        phases(k) = Complex(std::cos(angle), std::sin(angle));
    }
    ComplexMatrix U = eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
    // Newton-Schulz polish towards the nearest unitary: U <- U (3 - U†U) / 2
    const ComplexMatrix I = ComplexMatrix::Identity(n, n);
    for (int pass = 0; pass < 2; ++pass) {
        const ComplexMatrix defect = U.adjoint() * U - I;
        U -= 0.5 * U * defect;
    }
    return U;
}

namespace detail {

inline void require_bipartite(const ComplexMatrix& A, const SubsystemDims& dims,
                              std::size_t which, const char* what) {
    require_square(A, what);
    if (dims.size() != 2)
        throw DimensionError(std::string(what) + ": exactly two subsystems are supported");
    if (dims[0] < 1 || dims[1] < 1 || dims.total() != static_cast<std::size_t>(A.rows()))
        throw DimensionError(std::string(what) + ": subsystem dims inconsistent with matrix");
    if (which > 1)
        throw DimensionError(std::string(what) + ": subsystem index out of range");
}

}  // namespace detail

/// Reduced matrix on subsystem `keep` of a bipartite operator.
inline ComplexMatrix partial_trace(const ComplexMatrix& A, const SubsystemDims& dims,
                                   std::size_t keep) {
    detail::require_bipartite(A, dims, keep, "partial_trace");
    const auto d0 = static_cast<Eigen::Index>(dims[0]);
    const auto d1 = static_cast<Eigen::Index>(dims[1]);
    if (keep == 0) {
        ComplexMatrix out = ComplexMatrix::Zero(d0, d0);
        for (Eigen::Index i = 0; i < d0; ++i)
            for (Eigen::Index j = 0; j < d0; ++j)
                out(i, j) = A.block(i * d1, j * d1, d1, d1).trace();
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
    for (Eigen::Index k = 0; k < d0; ++k)
        out += A.block(k * d1, k * d1, d1, d1);
    return out;
}

/// Transposes the indices of subsystem `which` only.
inline ComplexMatrix partial_transpose(const ComplexMatrix& A, const SubsystemDims& dims,
                                       std::size_t which) {
    detail::require_bipartite(A, dims, which, "partial_transpose");
    const auto d0 = static_cast<Eigen::Index>(dims[0]);
    const auto d1 = static_cast<Eigen::Index>(dims[1]);
    ComplexMatrix out(A.rows(), A.cols());
    for (Eigen::Index i0 = 0; i0 < d0; ++i0)
        for (Eigen::Index j0 = 0; j0 < d0; ++j0)
            for (Eigen::Index i1 = 0; i1 < d1; ++i1)
                for (Eigen::Index j1 = 0; j1 < d1; ++j1) {
                    const Eigen::Index src_r = i0 * d1 + i1, src_c = j0 * d1 + j1;
                    const Eigen::Index dst_r = which == 0 ? j0 * d1 + i1 : i0 * d1 + j1;
                    const Eigen::Index dst_c = which == 0 ? i0 * d1 + j1 : j0 * d1 + i1;
                    out(dst_r, dst_c) = A(src_r, src_c);
                }
    return out;
}

/// Sum of |eigenvalues|; Hermitian inputs only.
inline double trace_norm(const ComplexMatrix& A) {
    return hermitian_eigenvalues(A).cwiseAbs().sum();
}

}  // namespace linalg
}  // namespace wipe
