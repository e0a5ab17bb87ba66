#pragma once

// Finite-dimensional model of a quadruple on l2(G): the algebras are C[L] ⊆
// C[H], C[K] ⊆ C[G] acting by left convolution, Jones projections are the
// diagonal coordinate projections onto l2(S), and e1 is the diagonal
// projection onto L.

#include "quadrant/algebra.hpp"
#include "quadrant/dense_operator.hpp"
#include "quadrant/quadruple.hpp"

#include <cstdint>
#include <vector>

namespace quadrant {

enum class PairOrder { PQ, QP };

/// Matrix of left convolution by a on l2(G): entry (x, y) is a(x y^-1).
DenseOperator regular_representation(const AlgebraElement& a);
RealMatrix regular_representation(const RealAlgebraElement& a);

/// Left convolution restricted to l2(S) for a supported in S. Since l2(G)
/// splits into [G:S] copies of l2(S) under C[S], spectra agree up to
/// multiplicity and normalized traces agree exactly.
DenseOperator regular_representation(const AlgebraElement& a, const Subgroup& s);
RealMatrix regular_representation(const RealAlgebraElement& a, const Subgroup& s);

/// Reads the algebra element back from an operator in the image of the
/// regular representation (its column at the identity). Throws DomainError
/// when the operator is farther than `tolerance` from that image.
RealAlgebraElement element_from_operator(const GroupPtr& group, const RealMatrix& op, double tolerance = 1e-9);

/// b_H = (1/|H|) sum of h over H.
AlgebraElement biprojection(const Subgroup& h);

DenseOperator jones_projection(const Subgroup& s);

/// Trace-preserving expectation onto C[S]: zero the coefficients outside S.
template <typename Scalar>
GroupAlgebraElement<Scalar> conditional_expectation(const GroupAlgebraElement<Scalar>& a, const Subgroup& s) {
    if (a.group() != s.parent()) throw DomainError("expectation onto a subgroup of another group");
    GroupAlgebraElement<Scalar> out = a;
    for (ElementIndex g = 0; g < a.dim(); ++g)
        if (!s.contains(g)) out[g] = Scalar(0);
    return out;
}

/// Left coset representatives of H/L, the smallest element index per coset.
std::vector<ElementIndex> coset_representatives(const Subgroup& h, const Subgroup& l);

/// Same cosets, representative drawn at random from each coset.
std::vector<ElementIndex> random_coset_representatives(const Subgroup& h, const Subgroup& l, std::uint64_t seed);

/// Pimsner-Popa basis for C[H] over C[L]: the coset representatives as unit
/// group elements. x = sum_i h_i E_L(h_i^* x) for every x in C[H].
std::vector<AlgebraElement> pp_basis(const Subgroup& h, const Subgroup& l);

/// p(P,Q) = sum_{i,j} λ_i μ_j e1 (λ_i μ_j)^* with λ, μ the bases of H/L and
/// K/L; p(Q,P) swaps the order of the product. Crossed picture only.
DenseOperator auxiliary_operator(const QuadrupleSpec& spec, PairOrder order);

/// Same sum with caller-chosen coset representatives.
DenseOperator auxiliary_operator(const QuadrupleSpec& spec, PairOrder order, std::span<const ElementIndex> reps_h,
                                 std::span<const ElementIndex> reps_k);

/// The modular conjugation on l2(G), δ_g -> δ_{g^-1}. It is conjugate-linear;
/// on the real operators used here the conjugation is the identity, so J A J
/// is a permutation conjugation.
struct ModularConjugation {
    DenseOperator permutation;
    std::vector<std::size_t> inverse_map;
    bool conjugate_linear = true;

    /// J A J
    DenseOperator conjugate(const DenseOperator& a) const;
};

ModularConjugation modular_conjugation(const GroupPtr& group);

}  // namespace quadrant
