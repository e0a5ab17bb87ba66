#include "quadrant/spectral.hpp"

#include "quadrant/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace quadrant {

namespace {

constexpr double kJoinThreshold = 1e-9;
constexpr double kNegativeClamp = 1e-9;
constexpr double kNegativeHardFailure = 1e-6;

void require_symmetric(const RealMatrix& a) {
    if (a.rows() != a.cols()) throw DomainError("matrix is not square");
    if (!is_symmetric(a)) throw DomainError("matrix is not Hermitian");
}

}  // namespace

bool is_symmetric(const RealMatrix& a, double tolerance) {
    if (a.rows() != a.cols()) return false;
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    return (a - a.transpose()).cwiseAbs().maxCoeff() <= tolerance * scale;
}

RealMatrix SpectralData::reconstruct() const {
    return apply([](double t) { return t; });
}

RealMatrix SpectralData::apply(const std::function<double(double)>& f) const {
    const Eigen::Index n = eigenvectors.rows();
    Eigen::VectorXd values(n);
    for (Eigen::Index i = 0; i < n; ++i) values(i) = f(eigenvalues[static_cast<std::size_t>(i)]);
    return eigenvectors * values.asDiagonal() * eigenvectors.transpose();
}

SpectralData spectral_decomposition(const RealMatrix& input, const JacobiOptions& options) {
    require_symmetric(input);
    const Eigen::Index n = input.rows();
    RealMatrix a = 0.5 * (input + input.transpose());
    RealMatrix v = RealMatrix::Identity(n, n);

    const double frobenius = a.norm();
    const double target = options.off_diagonal_tolerance * (frobenius > 0 ? frobenius : 1.0);
    auto off_norm = [&] {
        double sum = 0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) sum += a(p, q) * a(p, q);
        return std::sqrt(2 * sum);
    };

    int sweep = 0;
    while (off_norm() > target) {
        if (sweep++ >= options.max_sweeps) throw ConsistencyError("Jacobi iteration did not converge");
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                // A <- J^T A J with the rotation in the (p, q) plane
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

    SpectralData out;
    out.eigenvalues.reserve(static_cast<std::size_t>(n));
    out.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = order[static_cast<std::size_t>(k)];
        out.eigenvalues.push_back(a(src, src));
        out.eigenvectors.col(k) = v.col(src);
    }
    return out;
}

double eta(double t) { return t > 0 ? -t * std::log(t) : 0.0; }

double eta_trace(const RealMatrix& a) {
    if (a.rows() == 0) return 0;
    const auto spectrum = spectral_decomposition(a);
    double sum = 0;
    for (double lambda : spectrum.eigenvalues) {
        if (lambda < -kNegativeHardFailure)
            throw DomainError("eta_trace: operator is not positive semidefinite (eigenvalue " +
                              std::to_string(lambda) + ")");
        sum += eta(std::max(lambda, 0.0));
    }
    return sum / static_cast<double>(a.rows());
}

double eta_trace(const DenseOperator& a) { return eta_trace(a.to_real()); }

double operator_norm(const RealMatrix& a) {
    const auto spectrum = spectral_decomposition(a);
    if (spectrum.eigenvalues.empty()) return 0;
    return std::max(std::abs(spectrum.eigenvalues.front()), std::abs(spectrum.eigenvalues.back()));
}

double operator_norm(const DenseOperator& a) { return operator_norm(a.to_real()); }

double min_eigenvalue(const RealMatrix& a) {
    const auto spectrum = spectral_decomposition(a);
    return spectrum.eigenvalues.empty() ? 0.0 : spectrum.eigenvalues.back();
}

double min_eigenvalue(const DenseOperator& a) { return min_eigenvalue(a.to_real()); }

RealMatrix projection_join(const RealMatrix& p, const RealMatrix& q) {
    if (p.rows() != q.rows()) throw DomainError("dimension mismatch");
    for (const RealMatrix* m : {&p, &q}) {
        require_symmetric(*m);
        if ((*m * *m - *m).cwiseAbs().maxCoeff() > kJoinThreshold) throw DomainError("join input is not a projection");
    }
    const auto spectrum = spectral_decomposition(p + q);
    return spectrum.apply([](double t) { return t > kJoinThreshold ? 1.0 : 0.0; });
}

RealMatrix projection_join(const DenseOperator& p, const DenseOperator& q) {
    return projection_join(p.to_real(), q.to_real());
}

RealMatrix inverse_sqrt(const RealMatrix& a, double floor) {
    const auto spectrum = spectral_decomposition(a);
    const double top = spectrum.eigenvalues.empty() ? 0.0 : std::max(spectrum.eigenvalues.front(), 0.0);
    if (top <= 0) return RealMatrix::Zero(a.rows(), a.cols());
    const double cutoff = floor * top;
    if (spectrum.eigenvalues.back() < -std::max(kNegativeClamp, cutoff))
        throw DomainError("inverse_sqrt: operator is not positive semidefinite");
    return spectrum.apply([cutoff](double t) { return t > cutoff ? 1.0 / std::sqrt(t) : 0.0; });
}

}  // namespace quadrant
