#pragma once

#include "quadrant/error.hpp"
#include "quadrant/group.hpp"
#include "quadrant/rational.hpp"

#include <span>
#include <vector>

namespace quadrant {

/// An element of the group algebra C[G], stored as its coefficient function
/// on G (indexed by element index). Coefficients are real, so the adjoint is
/// a*(g) = a(g^-1).
template <typename Scalar>
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(GroupPtr group) : group_(std::move(group)), coeffs_(group_->order(), Scalar(0)) {}

    GroupAlgebraElement(GroupPtr group, std::vector<Scalar> coeffs)
        : group_(std::move(group)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != group_->order()) throw DomainError("coefficient vector has wrong length");
    }

    static GroupAlgebraElement unit(GroupPtr group) { return basis(std::move(group), FiniteGroup::identity()); }

    static GroupAlgebraElement basis(GroupPtr group, ElementIndex g, Scalar value = Scalar(1)) {
        GroupAlgebraElement out(std::move(group));
        out.coeffs_.at(g) = std::move(value);
        return out;
    }

    const GroupPtr& group() const { return group_; }
    std::size_t dim() const { return coeffs_.size(); }

    const Scalar& operator[](ElementIndex g) const { return coeffs_[g]; }
    Scalar& operator[](ElementIndex g) { return coeffs_[g]; }
    std::span<const Scalar> coefficients() const { return coeffs_; }

    /// Canonical trace: the coefficient at the identity.
    const Scalar& trace() const { return coeffs_[FiniteGroup::identity()]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != Scalar(0)) return false;
        return true;
    }

    bool supported_in(const Subgroup& s) const {
        for (ElementIndex g = 0; g < dim(); ++g)
            if (coeffs_[g] != Scalar(0) && !s.contains(g)) return false;
        return true;
    }

    GroupAlgebraElement adjoint() const {
        GroupAlgebraElement out(group_);
        for (ElementIndex g = 0; g < dim(); ++g) out.coeffs_[group_->inverse(g)] = coeffs_[g];
        return out;
    }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& rhs) {
        check_group(rhs);
        for (ElementIndex g = 0; g < dim(); ++g) coeffs_[g] += rhs.coeffs_[g];
        return *this;
    }

    GroupAlgebraElement& operator-=(const GroupAlgebraElement& rhs) {
        check_group(rhs);
        for (ElementIndex g = 0; g < dim(); ++g) coeffs_[g] -= rhs.coeffs_[g];
        return *this;
    }

    GroupAlgebraElement& operator*=(const Scalar& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Scalar& s) { return a *= s; }
    friend GroupAlgebraElement operator*(const Scalar& s, GroupAlgebraElement a) { return a *= s; }

    /// Convolution: (ab)(g) = sum over xy = g of a(x) b(y).
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        a.check_group(b);
        GroupAlgebraElement out(a.group_);
        const auto& group = *a.group_;
        for (ElementIndex x = 0; x < a.dim(); ++x) {
            if (a.coeffs_[x] == Scalar(0)) continue;
            for (ElementIndex y = 0; y < b.dim(); ++y) {
                if (b.coeffs_[y] == Scalar(0)) continue;
                out.coeffs_[group.multiply(x, y)] += a.coeffs_[x] * b.coeffs_[y];
            }
        }
        return out;
    }

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
    }

private:
    void check_group(const GroupAlgebraElement& other) const {
        if (group_ != other.group_) throw DomainError("algebra elements over different groups");
    }

    GroupPtr group_;
    std::vector<Scalar> coeffs_;
};

using AlgebraElement = GroupAlgebraElement<Rational>;
using RealAlgebraElement = GroupAlgebraElement<double>;

inline RealAlgebraElement to_real(const AlgebraElement& a) {
    std::vector<double> coeffs(a.dim());
    for (ElementIndex g = 0; g < a.dim(); ++g) coeffs[g] = a[g].get_d();
    return RealAlgebraElement(a.group(), std::move(coeffs));
}

}  // namespace quadrant
