#include "quadrant/dense_operator.hpp"

#include "quadrant/error.hpp"

namespace quadrant {

DenseOperator::DenseOperator(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

DenseOperator DenseOperator::identity(std::size_t dim) {
    DenseOperator out(dim);
    for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1;
    return out;
}

DenseOperator DenseOperator::diagonal_projection(std::size_t dim, std::span<const std::size_t> support) {
    DenseOperator out(dim);
    for (std::size_t i : support) {
        if (i >= dim) throw DomainError("projection support out of range");
        out(i, i) = 1;
    }
    return out;
}

Rational DenseOperator::normalized_trace() const {
    Rational sum = 0;
    for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
    if (dim_ > 0) sum /= static_cast<unsigned long>(dim_);
    return sum;
}

bool DenseOperator::is_zero() const {
    for (const auto& e : entries_)
        if (sgn(e) != 0) return false;
    return true;
}

bool DenseOperator::is_diagonal() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (i != j && sgn((*this)(i, j)) != 0) return false;
    return true;
}

bool DenseOperator::is_hermitian() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::size_t DenseOperator::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& e : entries_)
        if (sgn(e) != 0) ++n;
    return n;
}

DenseOperator DenseOperator::conjugated_by_permutation(std::span<const std::size_t> perm) const {
    DenseOperator out(dim_);
    out.add_permuted(*this, perm);
    return out;
}

void DenseOperator::add_permuted(const DenseOperator& a, std::span<const std::size_t> perm) {
    if (a.dim_ != dim_ || perm.size() != dim_) throw DomainError("dimension mismatch in permuted sum");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const Rational& v = a(i, j);
            if (sgn(v) != 0) (*this)(perm[i], perm[j]) += v;
        }
}

DenseOperator DenseOperator::transpose() const {
    DenseOperator out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

RealMatrix DenseOperator::to_real() const {
    RealMatrix out(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j).get_d();
    return out;
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& rhs) {
    if (rhs.dim_ != dim_) throw DomainError("dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& rhs) {
    if (rhs.dim_ != dim_) throw DomainError("dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

DenseOperator& DenseOperator::operator*=(const Rational& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim_ != b.dim_) throw DomainError("dimension mismatch");
    const std::size_t n = a.dim_;
    DenseOperator out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& bkj = b(k, j);
                if (sgn(bkj) != 0) out(i, j) += aik * bkj;
            }
        }
    return out;
}

}  // namespace quadrant
