#pragma once

#include "quadrant/rational.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace quadrant {

using RealMatrix = Eigen::MatrixXd;

/// Square matrix with exact rational entries acting on l2(G). Entries are
/// real, so Hermitian means symmetric.
class DenseOperator {
public:
    explicit DenseOperator(std::size_t dim);

    static DenseOperator identity(std::size_t dim);
    /// Diagonal 0/1 projection onto the listed coordinates.
    static DenseOperator diagonal_projection(std::size_t dim, std::span<const std::size_t> support);

    std::size_t dim() const { return dim_; }

    const Rational& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

    /// tr(A) / dim
    Rational normalized_trace() const;

    bool is_zero() const;
    bool is_diagonal() const;
    bool is_hermitian() const;
    std::size_t nonzero_count() const;

    /// Returns P A P^T where P is the permutation matrix sending basis vector
    /// i to basis vector perm[i].
    DenseOperator conjugated_by_permutation(std::span<const std::size_t> perm) const;

    /// Adds P A P^T in place, touching only the nonzero entries of A.
    void add_permuted(const DenseOperator& a, std::span<const std::size_t> perm);

    DenseOperator transpose() const;
    RealMatrix to_real() const;

    DenseOperator& operator+=(const DenseOperator& rhs);
    DenseOperator& operator-=(const DenseOperator& rhs);
    DenseOperator& operator*=(const Rational& s);

    friend DenseOperator operator+(DenseOperator a, const DenseOperator& b) { return a += b; }
    friend DenseOperator operator-(DenseOperator a, const DenseOperator& b) { return a -= b; }
    friend DenseOperator operator*(DenseOperator a, const Rational& s) { return a *= s; }
    friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
    friend bool operator==(const DenseOperator& a, const DenseOperator& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    std::size_t dim_;
    std::vector<Rational> entries_;
};

}  // namespace quadrant
