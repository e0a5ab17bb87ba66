#pragma once

#include "quadrant/dense_operator.hpp"

#include <functional>
#include <vector>

namespace quadrant {

struct JacobiOptions {
    double off_diagonal_tolerance = 1e-12;  // relative to the Frobenius norm
    int max_sweeps = 100;
};

/// Eigen-decomposition of a real symmetric matrix: A = V diag(eigenvalues) V^T
/// with eigenvalues sorted in descending order and V's columns orthonormal.
struct SpectralData {
    std::vector<double> eigenvalues;
    RealMatrix eigenvectors;

    RealMatrix reconstruct() const;
    /// V f(Λ) V^T
    RealMatrix apply(const std::function<double(double)>& f) const;
};

/// Cyclic Jacobi. Throws DomainError when A is not symmetric and
/// ConsistencyError when the sweep limit is reached before convergence.
SpectralData spectral_decomposition(const RealMatrix& a, const JacobiOptions& options = {});

bool is_symmetric(const RealMatrix& a, double tolerance = 1e-12);

/// eta(t) = -t log t, eta(0) = 0 (natural log).
double eta(double t);

/// Normalized trace of eta(A). Eigenvalues in [-1e-6, 0) are clamped to 0;
/// anything more negative throws DomainError.
double eta_trace(const RealMatrix& a);
double eta_trace(const DenseOperator& a);

double operator_norm(const RealMatrix& a);
double operator_norm(const DenseOperator& a);
double min_eigenvalue(const RealMatrix& a);
double min_eigenvalue(const DenseOperator& a);

/// Orthogonal projection onto range(p) + range(q): the support projection of
/// p + q with eigenvalue threshold 1e-9.
RealMatrix projection_join(const RealMatrix& p, const RealMatrix& q);
RealMatrix projection_join(const DenseOperator& p, const DenseOperator& q);

/// Moore-Penrose inverse square root of a PSD matrix; eigenvalues at or below
/// `floor` (relative to the largest) are treated as zero.
RealMatrix inverse_sqrt(const RealMatrix& a, double floor = 1e-12);

}  // namespace quadrant
