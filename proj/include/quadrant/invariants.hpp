#pragma once

#include "quadrant/matrix_model.hpp"
#include "quadrant/quadruple.hpp"
#include "quadrant/rational.hpp"

#include <string>
#include <vector>

namespace quadrant {

/// Jones indices of a quadruple N ⊂ P, Q ⊂ M.
struct IndexData {
    Rational M_N, P_N, Q_N, M_P, M_Q;

    friend bool operator==(const IndexData&, const IndexData&) = default;
};

/// The numbers every quadruple carries, whether it is the original one or
/// one obtained by a (downward) basic construction. Slot names refer to the
/// positions N ⊂ P, Q ⊂ M of that quadruple.
struct QuadrupleInvariants {
    IndexData indices;
    Rational trace_ePeQ;
    Rational lambda_PQ;
    Rational lambda_QP;
    Rational norm_lambda;  // ||p(P,Q)|| = [M:N] tr(e_P e_Q)
    double entropy_PQ = 0;  // H(P|Q), nats
    double entropy_QP = 0;  // H(Q|P), nats

    friend bool operator==(const QuadrupleInvariants&, const QuadrupleInvariants&) = default;
};

struct SquareFlags {
    bool commuting = false;
    bool cocommuting = false;
    bool P_subset_Q = false;
    bool Q_subset_P = false;

    friend bool operator==(const SquareFlags&, const SquareFlags&) = default;
};

enum class Index2Class { lambda_one, lambda_half, not_applicable };

std::string to_string(Index2Class c);
Index2Class parse_index2_class(const std::string& text);

struct SubgroupSummary {
    std::size_t order = 0;
    std::string generators;
    std::vector<std::size_t> members;

    friend bool operator==(const SubgroupSummary&, const SubgroupSummary&) = default;
};

struct InvariantReport {
    Picture picture = Picture::crossed;
    std::size_t group_order = 0;
    int group_degree = 0;
    SubgroupSummary H, K, L;
    QuadrupleInvariants core;
    SquareFlags flags;
    Index2Class index2 = Index2Class::not_applicable;
    QuadrupleInvariants dual;      // (M, P1, Q1, M1)
    QuadrupleInvariants downward;  // (N-1, P-1, Q-1, N)

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

IndexData index_data(const QuadrupleSpec& spec);

/// tr(e_P) = 1/[M:P], tr(e_Q) = 1/[M:Q].
Rational trace_e_first(const QuadrupleSpec& spec, PairOrder order);

/// crossed: |H∩K|/|G|; fixed: |H∩K|/(|H||K|)
Rational trace_e_pair(const QuadrupleSpec& spec);

/// λ(P,Q) for PQ, λ(Q,P) for QP, from the group formulas. Throws
/// ConsistencyError if tr(e_P e_Q)/tr(e_first) disagrees.
Rational lambda_pp(const QuadrupleSpec& spec, PairOrder order);

/// Both entropy routes: -log λ and log tr(e_first) - log tr(e_P e_Q).
struct EntropyRoutes {
    double from_lambda;
    double from_traces;
};

/// order QP is H(Q|P) = -log λ(Q,P); order PQ is H(P|Q) = -log λ(P,Q).
EntropyRoutes entropy_routes(const QuadrupleSpec& spec, PairOrder order);

/// H(Q|P) or H(P|Q) in nats. Throws ConsistencyError if the two routes
/// differ by more than 1e-12.
double relative_entropy(const QuadrupleSpec& spec, PairOrder order);

/// Square classification by group criteria and, independently, by the λ
/// identities. `agree` is the two-route verdict.
struct SquareClassification {
    SquareFlags by_group;
    SquareFlags by_lambda;
    bool agree = false;
};

SquareClassification classify_square(const QuadrupleSpec& spec);

/// Group-criterion flags; throws ConsistencyError if the λ route disagrees.
SquareFlags square_type(const QuadrupleSpec& spec);

/// Applies the basic construction to the invariants: the result describes
/// (M, P1, Q1, M1).
QuadrupleInvariants dual_of(const QuadrupleInvariants& q);

/// Applies the downward basic construction: the result describes
/// (N-1, P-1, Q-1, N).
QuadrupleInvariants downward_of(const QuadrupleInvariants& q);

QuadrupleInvariants core_invariants(const QuadrupleSpec& spec);
QuadrupleInvariants dual_invariants(const QuadrupleSpec& spec);
QuadrupleInvariants downward_invariants(const QuadrupleSpec& spec);

struct BoundsCheck {
    bool passed = true;
    std::vector<std::string> active;  // tight bounds, e.g. "lambda_PQ = 1/[P:N]"
    std::vector<std::string> violations;
};

/// 1 >= λ(P,Q) >= 1/[P:N] and 1 >= λ(P,Q) >= 1/[M:Q], and the same with P, Q
/// swapped.
BoundsCheck bounds_check(const QuadrupleSpec& spec);

/// For [P:N] = 2, which of λ(P,Q) ∈ {1, 1/2} holds.
Index2Class index2_classify(const QuadrupleSpec& spec);

SubgroupSummary summarize(const Subgroup& s);

InvariantReport invariant_report(const QuadrupleSpec& spec);

}  // namespace quadrant
