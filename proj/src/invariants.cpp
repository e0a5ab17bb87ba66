#include "quadrant/invariants.hpp"

#include "quadrant/error.hpp"

#include <cmath>

namespace quadrant {

namespace {

constexpr double kEntropyRouteTolerance = 1e-12;

Rational ratio(std::size_t num, std::size_t den) {
    Rational r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
    r.canonicalize();
    return r;
}

std::size_t intersection_order(const QuadrupleSpec& spec) {
    return intersect(spec.upper_left, spec.upper_right).order();
}

double neg_log(const Rational& r) { return r == 1 ? 0.0 : -std::log(r.get_d()); }

}  // namespace

std::string to_string(Index2Class c) {
    switch (c) {
    case Index2Class::lambda_one: return "lambda_one";
    case Index2Class::lambda_half: return "lambda_half";
    case Index2Class::not_applicable: return "not_applicable";
    }
    return "not_applicable";
}

Index2Class parse_index2_class(const std::string& text) {
    if (text == "lambda_one") return Index2Class::lambda_one;
    if (text == "lambda_half") return Index2Class::lambda_half;
    if (text == "not_applicable") return Index2Class::not_applicable;
    throw InputError("unknown index-2 class '" + text + "'");
}

IndexData index_data(const QuadrupleSpec& spec) {
    const std::size_t g = spec.group_order();
    const std::size_t h = spec.upper_left.order();
    const std::size_t k = spec.upper_right.order();
    const std::size_t l = spec.base.order();
    if (spec.picture == Picture::crossed) return IndexData{ratio(g, l), ratio(h, l), ratio(k, l), ratio(g, h), ratio(g, k)};
    // fixed points: [S^H : S^G] = [G:H] and [S : S^H] = |H|
    return IndexData{ratio(g, l), ratio(g, h * l), ratio(g, k * l), ratio(h, 1), ratio(k, 1)};
}

Rational trace_e_first(const QuadrupleSpec& spec, PairOrder order) {
    const IndexData idx = index_data(spec);
    return 1 / (order == PairOrder::PQ ? idx.M_P : idx.M_Q);
}

Rational trace_e_pair(const QuadrupleSpec& spec) {
    const std::size_t hk = intersection_order(spec);
    if (spec.picture == Picture::crossed) return ratio(hk, spec.group_order());
    return ratio(hk, spec.upper_left.order() * spec.upper_right.order());
}

Rational lambda_pp(const QuadrupleSpec& spec, PairOrder order) {
    const std::size_t hk = intersection_order(spec);
    const std::size_t h = spec.upper_left.order();
    const std::size_t k = spec.upper_right.order();
    const bool first_is_h = (order == PairOrder::PQ) == (spec.picture == Picture::crossed);
    Rational lambda = ratio(hk, first_is_h ? h : k);
    Rational via_traces = trace_e_pair(spec) / trace_e_first(spec, order);
    if (lambda != via_traces) throw ConsistencyError("lambda group formula disagrees with the trace formula");
    return lambda;
}

EntropyRoutes entropy_routes(const QuadrupleSpec& spec, PairOrder order) {
    const Rational lambda = lambda_pp(spec, order);
    const double via_lambda = neg_log(lambda);
    const double via_traces = std::log(trace_e_first(spec, order).get_d()) - std::log(trace_e_pair(spec).get_d());
    return {via_lambda, via_traces};
}

double relative_entropy(const QuadrupleSpec& spec, PairOrder order) {
    const auto routes = entropy_routes(spec, order);
    if (std::abs(routes.from_lambda - routes.from_traces) > kEntropyRouteTolerance)
        throw ConsistencyError("entropy routes disagree");
    return routes.from_lambda;
}

SquareClassification classify_square(const QuadrupleSpec& spec) {
    const Subgroup& h = spec.upper_left;
    const Subgroup& k = spec.upper_right;
    const Subgroup hk = intersect(h, k);
    const std::size_t g = spec.group_order();
    const bool full_product = h.order() * k.order() == g * hk.order();

    SquareClassification out;
    if (spec.picture == Picture::crossed) {
        out.by_group.commuting = hk == spec.base;
        out.by_group.cocommuting = full_product;
        out.by_group.P_subset_Q = h.is_subgroup_of(k);
        out.by_group.Q_subset_P = k.is_subgroup_of(h);
    } else {
        out.by_group.commuting = full_product;
        out.by_group.cocommuting = hk.is_trivial();
        out.by_group.P_subset_Q = k.is_subgroup_of(h);
        out.by_group.Q_subset_P = h.is_subgroup_of(k);
    }

    const IndexData idx = index_data(spec);
    const Rational pq = lambda_pp(spec, PairOrder::PQ);
    const Rational qp = lambda_pp(spec, PairOrder::QP);
    const bool commuting_pq = pq == 1 / idx.P_N;
    const bool commuting_qp = qp == 1 / idx.Q_N;
    const bool cocommuting_pq = pq == 1 / idx.M_Q;
    const bool cocommuting_qp = qp == 1 / idx.M_P;
    out.by_lambda.commuting = commuting_pq;
    out.by_lambda.cocommuting = cocommuting_pq;
    out.by_lambda.P_subset_Q = pq == 1;
    out.by_lambda.Q_subset_P = qp == 1;
    out.agree = out.by_group == out.by_lambda && commuting_pq == commuting_qp && cocommuting_pq == cocommuting_qp;
    return out;
}

SquareFlags square_type(const QuadrupleSpec& spec) {
    const auto c = classify_square(spec);
    if (!c.agree) throw ConsistencyError("square criteria disagree with the lambda identities");
    return c.by_group;
}

QuadrupleInvariants dual_of(const QuadrupleInvariants& q) {
    QuadrupleInvariants d;
    d.indices = IndexData{q.indices.M_N, q.indices.M_P, q.indices.M_Q, q.indices.P_N, q.indices.Q_N};
    d.trace_ePeQ = q.indices.M_P / q.indices.Q_N * q.trace_ePeQ;
    if (d.trace_ePeQ != q.indices.M_Q / q.indices.P_N * q.trace_ePeQ)
        throw ConsistencyError("dual trace identities disagree");
    d.lambda_PQ = q.lambda_QP;
    d.lambda_QP = q.lambda_PQ;
    d.norm_lambda = d.indices.M_N * d.trace_ePeQ;
    d.entropy_PQ = q.entropy_QP;
    d.entropy_QP = q.entropy_PQ;
    // tr(e_Q1) = 1/[Q:N], tr(e_P1) = 1/[P:N]
    if (d.lambda_QP != d.trace_ePeQ * q.indices.Q_N || d.lambda_PQ != d.trace_ePeQ * q.indices.P_N)
        throw ConsistencyError("dual lambda disagrees with dual trace");
    return d;
}

QuadrupleInvariants downward_of(const QuadrupleInvariants& q) {
    QuadrupleInvariants d;
    // [P-1:N-1] = [M:P], [N:P-1] = [P:N]
    d.indices = IndexData{q.indices.M_N, q.indices.M_P, q.indices.M_Q, q.indices.P_N, q.indices.Q_N};
    d.trace_ePeQ = q.indices.M_Q / q.indices.P_N * q.trace_ePeQ;
    if (d.trace_ePeQ != q.indices.M_P / q.indices.Q_N * q.trace_ePeQ)
        throw ConsistencyError("downward trace identities disagree");
    d.lambda_PQ = q.lambda_QP;
    d.lambda_QP = q.lambda_PQ;
    d.norm_lambda = d.indices.M_N * d.trace_ePeQ;
    d.entropy_PQ = q.entropy_QP;
    d.entropy_QP = q.entropy_PQ;
    // tr(e_P-1) = 1/[P:N]
    if (d.lambda_PQ != d.trace_ePeQ * q.indices.P_N || d.lambda_QP != d.trace_ePeQ * q.indices.Q_N)
        throw ConsistencyError("downward lambda disagrees with downward trace");
    return d;
}

QuadrupleInvariants core_invariants(const QuadrupleSpec& spec) {
    QuadrupleInvariants q;
    q.indices = index_data(spec);
    q.trace_ePeQ = trace_e_pair(spec);
    q.lambda_PQ = lambda_pp(spec, PairOrder::PQ);
    q.lambda_QP = lambda_pp(spec, PairOrder::QP);
    q.norm_lambda = q.indices.M_N * q.trace_ePeQ;
    q.entropy_PQ = relative_entropy(spec, PairOrder::PQ);
    q.entropy_QP = relative_entropy(spec, PairOrder::QP);
    return q;
}

QuadrupleInvariants dual_invariants(const QuadrupleSpec& spec) { return dual_of(core_invariants(spec)); }

QuadrupleInvariants downward_invariants(const QuadrupleSpec& spec) { return downward_of(core_invariants(spec)); }

BoundsCheck bounds_check(const QuadrupleSpec& spec) {
    const IndexData idx = index_data(spec);
    BoundsCheck out;
    auto chain = [&](const std::string& name, const Rational& lambda, const Rational& relative_index,
                     const std::string& relative_name, const Rational& outer_index, const std::string& outer_name) {
        auto check = [&](const Rational& bound, const std::string& bound_name, bool upper) {
            const bool ok = upper ? lambda <= bound : lambda >= bound;
            const std::string relation = name + (upper ? " <= " : " >= ") + bound_name;
            if (!ok) {
                out.passed = false;
                out.violations.push_back(relation + " (" + to_string(lambda) + " vs " + to_string(bound) + ")");
            } else if (lambda == bound) {
                out.active.push_back(name + " = " + bound_name);
            }
        };
        check(Rational(1), "1", true);
        check(1 / relative_index, "1/" + relative_name, false);
        check(1 / outer_index, "1/" + outer_name, false);
    };
    chain("lambda_PQ", lambda_pp(spec, PairOrder::PQ), idx.P_N, "[P:N]", idx.M_Q, "[M:Q]");
    chain("lambda_QP", lambda_pp(spec, PairOrder::QP), idx.Q_N, "[Q:N]", idx.M_P, "[M:P]");
    return out;
}

Index2Class index2_classify(const QuadrupleSpec& spec) {
    const IndexData idx = index_data(spec);
    if (idx.P_N != 2) return Index2Class::not_applicable;
    const Rational lambda = lambda_pp(spec, PairOrder::PQ);
    const bool contained = classify_square(spec).by_group.P_subset_Q;
    if (lambda == 1) {
        if (!contained) throw ConsistencyError("lambda(P,Q) = 1 but P is not contained in Q");
        return Index2Class::lambda_one;
    }
    if (lambda == Rational(1, 2)) {
        if (contained) throw ConsistencyError("P is contained in Q but lambda(P,Q) = 1/2");
        return Index2Class::lambda_half;
    }
    throw ConsistencyError("[P:N] = 2 but lambda(P,Q) = " + to_string(lambda));
}

SubgroupSummary summarize(const Subgroup& s) {
    return SubgroupSummary{s.order(), s.generators_string(), s.members()};
}

InvariantReport invariant_report(const QuadrupleSpec& spec) {
    InvariantReport r;
    r.picture = spec.picture;
    r.group_order = spec.group_order();
    r.group_degree = spec.group->degree();
    r.H = summarize(spec.upper_left);
    r.K = summarize(spec.upper_right);
    r.L = summarize(spec.base);
    r.core = core_invariants(spec);
    r.flags = square_type(spec);
    r.index2 = index2_classify(spec);
    r.dual = dual_of(r.core);
    r.downward = downward_of(r.core);
    return r;
}

}  // namespace quadrant
