#include "quadrant/matrix_model.hpp"

#include "quadrant/error.hpp"
#include "quadrant/rng.hpp"

#include <algorithm>
#include <cmath>

namespace quadrant {

namespace {

template <typename Scalar, typename Out>
void fill_regular(const GroupAlgebraElement<Scalar>& a, std::span<const ElementIndex> basis, Out&& set) {
    const auto& group = *a.group();
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const ElementIndex y_inv = group.inverse(basis[col]);
        for (std::size_t row = 0; row < basis.size(); ++row) set(row, col, a[group.multiply(basis[row], y_inv)]);
    }
}

std::vector<ElementIndex> all_elements(const FiniteGroup& group) {
    std::vector<ElementIndex> out(group.order());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

void require_support(const auto& a, const Subgroup& s) {
    if (a.group() != s.parent()) throw DomainError("element and subgroup belong to different groups");
    if (!a.supported_in(s)) throw DomainError("element is not supported in the subgroup");
}

}  // namespace

DenseOperator regular_representation(const AlgebraElement& a) {
    DenseOperator out(a.dim());
    const auto basis = all_elements(*a.group());
    fill_regular(a, basis, [&](std::size_t r, std::size_t c, const Rational& v) { out(r, c) = v; });
    return out;
}

RealMatrix regular_representation(const RealAlgebraElement& a) {
    const auto n = static_cast<Eigen::Index>(a.dim());
    RealMatrix out(n, n);
    const auto basis = all_elements(*a.group());
    fill_regular(a, basis, [&](std::size_t r, std::size_t c, double v) {
        out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    });
    return out;
}

DenseOperator regular_representation(const AlgebraElement& a, const Subgroup& s) {
    require_support(a, s);
    DenseOperator out(s.order());
    fill_regular(a, s.members(), [&](std::size_t r, std::size_t c, const Rational& v) { out(r, c) = v; });
    return out;
}

RealMatrix regular_representation(const RealAlgebraElement& a, const Subgroup& s) {
    require_support(a, s);
    const auto n = static_cast<Eigen::Index>(s.order());
    RealMatrix out(n, n);
    fill_regular(a, s.members(), [&](std::size_t r, std::size_t c, double v) {
        out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    });
    return out;
}

RealAlgebraElement element_from_operator(const GroupPtr& group, const RealMatrix& op, double tolerance) {
    const auto n = static_cast<Eigen::Index>(group->order());
    if (op.rows() != n || op.cols() != n) throw DomainError("operator dimension does not match the group");
    std::vector<double> coeffs(group->order());
    for (Eigen::Index g = 0; g < n; ++g) coeffs[static_cast<std::size_t>(g)] = op(g, 0);
    RealAlgebraElement a(group, std::move(coeffs));
    const double deviation = (regular_representation(a) - op).cwiseAbs().maxCoeff();
    if (deviation > tolerance) throw DomainError("operator is outside the group-algebra image");
    return a;
}

AlgebraElement biprojection(const Subgroup& h) {
    AlgebraElement b(h.parent());
    const Rational weight(1, static_cast<unsigned long>(h.order()));
    for (ElementIndex g : h.members()) b[g] = weight;
    return b;
}

DenseOperator jones_projection(const Subgroup& s) {
    return DenseOperator::diagonal_projection(s.parent()->order(), s.members());
}

namespace {

template <typename Choose>
std::vector<ElementIndex> cosets_with(const Subgroup& h, const Subgroup& l, Choose&& choose) {
    if (!l.is_subgroup_of(h)) throw DomainError("L is not contained in H");
    const auto& group = *h.parent();
    std::vector<char> covered(group.order(), 0);
    std::vector<ElementIndex> reps;
    for (ElementIndex x : h.members()) {
        if (covered[x]) continue;
        std::vector<ElementIndex> coset;
        coset.reserve(l.order());
        for (ElementIndex y : l.members()) {
            const ElementIndex xy = group.multiply(x, y);
            covered[xy] = 1;
            coset.push_back(xy);
        }
        reps.push_back(choose(coset));
    }
    return reps;
}

}  // namespace

std::vector<ElementIndex> coset_representatives(const Subgroup& h, const Subgroup& l) {
    return cosets_with(h, l, [](const std::vector<ElementIndex>& coset) {
        return *std::min_element(coset.begin(), coset.end());
    });
}

std::vector<ElementIndex> random_coset_representatives(const Subgroup& h, const Subgroup& l, std::uint64_t seed) {
    CounterRng rng(seed);
    return cosets_with(h, l, [&](const std::vector<ElementIndex>& coset) { return coset[rng.below(coset.size())]; });
}

std::vector<AlgebraElement> pp_basis(const Subgroup& h, const Subgroup& l) {
    std::vector<AlgebraElement> basis;
    for (ElementIndex g : coset_representatives(h, l)) basis.push_back(AlgebraElement::basis(h.parent(), g));
    return basis;
}

DenseOperator auxiliary_operator(const QuadrupleSpec& spec, PairOrder order) {
    const auto reps_h = coset_representatives(spec.upper_left, spec.base);
    const auto reps_k = coset_representatives(spec.upper_right, spec.base);
    return auxiliary_operator(spec, order, reps_h, reps_k);
}

DenseOperator auxiliary_operator(const QuadrupleSpec& spec, PairOrder order, std::span<const ElementIndex> reps_h,
                                 std::span<const ElementIndex> reps_k) {
    if (spec.picture != Picture::crossed)
        throw DomainError("the matrix model realizes the crossed-product picture only");
    const auto& group = *spec.group;
    const std::size_t n = group.order();
    const DenseOperator e1 = jones_projection(spec.base);
    DenseOperator p(n);
    std::vector<std::size_t> perm(n);
    for (ElementIndex lambda : reps_h) {
        for (ElementIndex mu : reps_k) {
            const ElementIndex g = order == PairOrder::PQ ? group.multiply(lambda, mu) : group.multiply(mu, lambda);
            for (ElementIndex x = 0; x < n; ++x) perm[x] = group.multiply(g, x);
            p.add_permuted(e1, perm);
        }
    }
    return p;
}

DenseOperator ModularConjugation::conjugate(const DenseOperator& a) const {
    return a.conjugated_by_permutation(inverse_map);
}

ModularConjugation modular_conjugation(const GroupPtr& group) {
    ModularConjugation j{DenseOperator(group->order()), std::vector<std::size_t>(group->order()), true};
    for (ElementIndex g = 0; g < group->order(); ++g) {
        j.inverse_map[g] = group->inverse(g);
        j.permutation(group->inverse(g), g) = 1;
    }
    return j;
}

}  // namespace quadrant
