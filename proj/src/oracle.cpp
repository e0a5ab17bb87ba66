#include "quadrant/oracle.hpp"

#include "quadrant/error.hpp"
#include "quadrant/parallel.hpp"
#include "quadrant/rng.hpp"
#include "quadrant/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace quadrant {

namespace {

constexpr double kSupportThreshold = 1e-9;
constexpr double kIdentityFloor = 1e-6;
constexpr int kPartitionRetries = 10;

const Subgroup& first_subgroup(const QuadrupleSpec& spec, PairOrder order) {
    return order == PairOrder::PQ ? spec.upper_left : spec.upper_right;
}

const Subgroup& second_subgroup(const QuadrupleSpec& spec, PairOrder order) {
    return order == PairOrder::PQ ? spec.upper_right : spec.upper_left;
}

std::string pair_label(PairOrder order) { return order == PairOrder::PQ ? "PQ" : "QP"; }

void require_crossed(const QuadrupleSpec& spec, const char* what) {
    if (spec.picture != Picture::crossed)
        throw DomainError(std::string(what) + " is evaluated on the crossed-product model only");
}

void require_trivial_base(const QuadrupleSpec& spec, const char* what) {
    require_crossed(spec, what);
    if (!spec.base.is_trivial())
        throw DomainError(std::string(what) + " needs L = {e}: the biprojection witness is exact only there");
}

RealAlgebraElement random_element_on(const Subgroup& s, CounterRng& rng) {
    RealAlgebraElement a(s.parent());
    for (ElementIndex g : s.members()) a[g] = rng.uniform(-1.0, 1.0);
    return a;
}

RealMatrix symmetrized(const RealMatrix& m) { return 0.5 * (m + m.transpose()); }

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

}  // namespace

std::string to_string(CheckKind kind) {
    switch (kind) {
    case CheckKind::two_sided: return "two_sided";
    case CheckKind::lower_bound: return "lower_bound";
    case CheckKind::upper_bound: return "upper_bound";
    case CheckKind::exact: return "exact";
    }
    return "two_sided";
}

bool comparison_holds(CheckKind kind, double closed_form, double oracle_value, double tolerance) {
    switch (kind) {
    case CheckKind::two_sided: return std::abs(closed_form - oracle_value) <= tolerance;
    case CheckKind::lower_bound: return oracle_value >= closed_form - tolerance;
    case CheckKind::upper_bound: return oracle_value <= closed_form + tolerance;
    case CheckKind::exact: return oracle_value == closed_form;
    }
    return false;
}

double pencil_value(const RealAlgebraElement& x, const QuadrupleSpec& spec, PairOrder order) {
    require_crossed(spec, "pencil_value");
    const Subgroup& first = first_subgroup(spec, order);
    const Subgroup& second = second_subgroup(spec, order);
    if (!x.supported_in(first)) throw DomainError("pencil witness must lie in the first algebra");

    const RealMatrix s = regular_representation(x, first);
    const RealMatrix e = regular_representation(conditional_expectation(x, second), first);
    const SpectralData sd = spectral_decomposition(s);
    const double top = sd.eigenvalues.front();
    if (top <= 0) throw DomainError("pencil witness is zero");
    if (sd.eigenvalues.back() < -kSupportThreshold * std::max(1.0, top))
        throw DomainError("pencil witness is not positive semidefinite");

    const double cutoff = kSupportThreshold * top;
    std::vector<Eigen::Index> range, kernel;
    for (Eigen::Index i = 0; i < s.rows(); ++i)
        (sd.eigenvalues[static_cast<std::size_t>(i)] > cutoff ? range : kernel).push_back(i);

    RealMatrix vr(s.rows(), static_cast<Eigen::Index>(range.size()));
    Eigen::VectorXd scale(static_cast<Eigen::Index>(range.size()));
    for (std::size_t c = 0; c < range.size(); ++c) {
        vr.col(static_cast<Eigen::Index>(c)) = sd.eigenvectors.col(range[c]);
        scale(static_cast<Eigen::Index>(c)) = 1.0 / std::sqrt(sd.eigenvalues[static_cast<std::size_t>(range[c])]);
    }
    // E - t x = (E - x) + (1 - t) x, and x compresses to the identity on its
    // range, so only D = E - x needs to pass through the compression.
    RealMatrix err = vr.transpose() * (e - s) * vr;
    if (!kernel.empty()) {
        // E - t x >= 0 with x vanishing on the kernel: Schur complement of E_ZZ
        RealMatrix vz(s.rows(), static_cast<Eigen::Index>(kernel.size()));
        for (std::size_t c = 0; c < kernel.size(); ++c) vz.col(static_cast<Eigen::Index>(c)) = sd.eigenvectors.col(kernel[c]);
        const RealMatrix erz = vr.transpose() * e * vz;
        const RealMatrix ezz = symmetrized(vz.transpose() * e * vz);
        const SpectralData zd = spectral_decomposition(ezz);
        const double ztop = std::max(1.0, std::abs(zd.eigenvalues.front()));
        const RealMatrix pinv = zd.apply([&](double t) { return t > kSupportThreshold * ztop ? 1.0 / t : 0.0; });
        err -= erz * pinv * erz.transpose();
    }
    const RealMatrix compressed = scale.asDiagonal() * err * scale.asDiagonal();
    return 1.0 + min_eigenvalue(symmetrized(compressed));
}

OracleReport lambda_positivity_sample(const QuadrupleSpec& spec, std::size_t n, std::uint64_t seed, PairOrder order,
                                      std::optional<Rational> claimed, double tolerance, unsigned threads) {
    require_trivial_base(spec, "lambda_positivity_sample");
    if (n == 0) throw DomainError("positivity sampling needs at least one sample");
    const Subgroup& first = first_subgroup(spec, order);
    const Subgroup& second = second_subgroup(spec, order);
    const double lambda = (claimed ? *claimed : lambda_pp(spec, order)).get_d();

    struct Sample {
        double min_eigen = 0;
        double pencil = 0;
    };
    const auto samples = parallel_map(n, threads, [&](std::size_t i) {
        CounterRng rng(seed, i);
        const RealAlgebraElement a = random_element_on(first, rng);
        const RealAlgebraElement x = a.adjoint() * a;
        const RealAlgebraElement ex = conditional_expectation(x, second);
        const RealMatrix diff = regular_representation(ex, first) - lambda * regular_representation(x, first);
        return Sample{min_eigenvalue(symmetrized(diff)), pencil_value(x, spec, order)};
    });

    double min_eigen = std::numeric_limits<double>::infinity();
    double min_pencil = std::numeric_limits<double>::infinity();
    for (const auto& s : samples) {
        min_eigen = std::min(min_eigen, s.min_eigen);
        min_pencil = std::min(min_pencil, s.pencil);
    }
    const double witness = pencil_value(to_real(biprojection(first)), spec, order);

    OracleReport r;
    r.quantity = "lambda_" + pair_label(order) + "_positivity";
    r.kind = CheckKind::lower_bound;
    r.closed_form = lambda;
    r.oracle_value = std::min(min_pencil, witness);
    r.oracle_values = {min_pencil, witness, min_eigen};
    r.tolerance = tolerance;
    r.samples = n;
    r.seed = seed;
    const bool psd = min_eigen >= -tolerance;
    r.passed = psd && comparison_holds(r.kind, r.closed_form, r.oracle_value, tolerance);
    r.detail = "min pencil " + fmt(min_pencil) + ", witness pencil " + fmt(witness) + ", min eig(E(x) - lambda x) " +
               fmt(min_eigen);
    return r;
}

OracleReport lambda_witness(const QuadrupleSpec& spec, PairOrder order, double tolerance) {
    require_trivial_base(spec, "lambda_witness");
    const Subgroup& first = first_subgroup(spec, order);
    OracleReport r;
    r.quantity = "lambda_" + pair_label(order) + "_witness";
    r.kind = CheckKind::two_sided;
    r.closed_form = lambda_pp(spec, order).get_d();
    r.oracle_value = pencil_value(to_real(biprojection(first)), spec, order);
    r.oracle_values = {r.oracle_value};
    r.tolerance = tolerance;
    r.samples = 1;
    r.passed = comparison_holds(r.kind, r.closed_form, r.oracle_value, tolerance);
    r.detail = "pencil value of the biprojection of the first subgroup";
    return r;
}

PartitionOfUnity PartitionOfUnity::from_operators(GroupPtr group, std::vector<RealMatrix> parts, double tolerance) {
    if (parts.empty()) throw DomainError("partition of unity needs at least one part");
    const auto n = static_cast<Eigen::Index>(group->order());
    RealMatrix sum = RealMatrix::Zero(n, n);
    std::vector<RealAlgebraElement> elements;
    for (const auto& part : parts) {
        elements.push_back(element_from_operator(group, part, tolerance));
        if (!is_symmetric(part, tolerance)) throw DomainError("partition part is not Hermitian");
        if (min_eigenvalue(symmetrized(part)) < -tolerance) throw DomainError("partition part is not positive");
        sum += part;
    }
    if ((sum - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > tolerance)
        throw DomainError("partition parts do not sum to the identity");
    return PartitionOfUnity(std::move(group), std::move(parts), std::move(elements));
}

PartitionOfUnity PartitionOfUnity::from_elements(GroupPtr group, std::vector<RealAlgebraElement> parts,
                                                 double tolerance) {
    std::vector<RealMatrix> ops;
    ops.reserve(parts.size());
    for (const auto& p : parts) {
        if (p.group() != group) throw DomainError("partition part belongs to another group");
        ops.push_back(regular_representation(p));
    }
    return from_operators(std::move(group), std::move(ops), tolerance);
}

PartitionOfUnity random_partition(const GroupPtr& group, std::size_t m, std::uint64_t seed) {
    if (m == 0) throw DomainError("partition needs at least one part");
    const Subgroup whole = Subgroup::whole(group);
    for (int attempt = 0; attempt < kPartitionRetries; ++attempt) {
        CounterRng rng(seed, static_cast<std::uint64_t>(attempt));
        std::vector<RealAlgebraElement> ys;
        ys.push_back(RealAlgebraElement::basis(group, FiniteGroup::identity(), kIdentityFloor));
        for (std::size_t i = 1; i < m; ++i) {
            const RealAlgebraElement a = random_element_on(whole, rng);
            ys.push_back(a.adjoint() * a);
        }
        RealAlgebraElement s(group);
        for (const auto& y : ys) s += y;
        const RealMatrix root = inverse_sqrt(regular_representation(s));
        const RealAlgebraElement c = element_from_operator(group, symmetrized(root), 1e-6);
        std::vector<RealAlgebraElement> parts;
        parts.reserve(m);
        for (const auto& y : ys) {
            // c y c is self-adjoint; remove the rounding asymmetry
            const RealAlgebraElement x = c * y * c;
            parts.push_back((x + x.adjoint()) * 0.5);
        }
        try {
            return PartitionOfUnity::from_elements(group, std::move(parts));
        } catch (const DomainError&) {
            // rounding pushed a part outside tolerance; draw again
        }
    }
    throw ConsistencyError("random_partition: no valid partition after " + std::to_string(kPartitionRetries) +
                           " attempts");
}

PartitionOfUnity biprojection_partition(const Subgroup& k) {
    const RealAlgebraElement b = to_real(biprojection(k));
    return PartitionOfUnity::from_elements(k.parent(), {b, RealAlgebraElement::unit(k.parent()) - b});
}

double partition_eta_profile(const PartitionOfUnity& partition, const Subgroup& s) {
    if (partition.group() != s.parent()) throw DomainError("partition and subgroup belong to different groups");
    double sum = 0;
    for (const auto& x : partition.elements()) sum += eta_trace(regular_representation(conditional_expectation(x, s), s));
    return sum;
}

double partition_entropy_value(const PartitionOfUnity& partition, const QuadrupleSpec& spec, PairOrder order) {
    require_crossed(spec, "partition_entropy_value");
    // H(Q|P) = sup Σ tr η(E_P x_i) - tr η(E_Q x_i); order PQ swaps P and Q
    const Subgroup& conditioned = order == PairOrder::QP ? spec.upper_left : spec.upper_right;
    const Subgroup& subject = order == PairOrder::QP ? spec.upper_right : spec.upper_left;
    return partition_eta_profile(partition, conditioned) - partition_eta_profile(partition, subject);
}

std::size_t partition_size_for(std::uint64_t seed, std::size_t index) {
    CounterRng rng(seed, index);
    return 2 + rng.below(4);
}

std::uint64_t partition_seed_for(std::uint64_t seed, std::size_t index) {
    CounterRng rng(seed, index);
    rng.next();
    return rng.next();
}

OracleReport partition_entropy_sample(const QuadrupleSpec& spec, PairOrder order, std::size_t count,
                                      std::uint64_t seed, double tolerance, unsigned threads) {
    require_crossed(spec, "partition_entropy_sample");
    const double closed = relative_entropy(spec, order);
    const auto values = parallel_map(count, threads, [&](std::size_t i) {
        const auto partition = random_partition(spec.group, partition_size_for(seed, i), partition_seed_for(seed, i));
        return partition_entropy_value(partition, spec, order);
    });
    OracleReport r;
    r.quantity = order == PairOrder::QP ? "entropy_QP_partitions" : "entropy_PQ_partitions";
    r.kind = CheckKind::upper_bound;
    r.closed_form = closed;
    r.oracle_value = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
    r.oracle_values = {r.oracle_value};
    r.tolerance = tolerance;
    r.samples = count;
    r.seed = seed;
    r.passed = comparison_holds(r.kind, r.closed_form, r.oracle_value, tolerance);
    r.detail = "max over random partitions of unity";
    return r;
}

OracleReport biprojection_partition_check(const QuadrupleSpec& spec, double tolerance) {
    require_crossed(spec, "biprojection_partition_check");
    const double value = partition_entropy_value(biprojection_partition(spec.upper_right), spec, PairOrder::QP);
    const bool contained = spec.upper_right.is_subgroup_of(spec.upper_left);
    OracleReport r;
    r.quantity = "entropy_QP_biprojection_partition";
    r.kind = CheckKind::upper_bound;
    r.closed_form = relative_entropy(spec, PairOrder::QP);
    r.oracle_value = value;
    r.oracle_values = {value};
    r.tolerance = tolerance;
    r.samples = 1;
    const bool positivity_ok = contained ? std::abs(value) <= tolerance : value > tolerance;
    r.passed = positivity_ok && comparison_holds(r.kind, r.closed_form, value, tolerance);
    r.detail = contained ? "K within H: value must vanish" : "K not within H: value must be strictly positive";
    return r;
}

OracleReport verify_liu(const QuadrupleSpec& spec, double tolerance) {
    require_trivial_base(spec, "verify_liu");
    const AlgebraElement expected = conditional_expectation(biprojection(spec.upper_right), spec.upper_left);
    OracleReport r;
    r.quantity = "liu_eta_trace";
    r.kind = CheckKind::two_sided;
    const Rational lambda_qp = lambda_pp(spec, PairOrder::QP);
    r.closed_form = (0.0 - std::log(lambda_qp.get_d())) / index_data(spec).Q_N.get_d();
    r.oracle_value = eta_trace(regular_representation(to_real(expected)));
    r.oracle_values = {r.oracle_value};
    r.tolerance = tolerance;
    r.samples = 1;
    r.passed = comparison_holds(r.kind, r.closed_form, r.oracle_value, tolerance);
    r.detail = "tr eta(E_P(b_K)) against -(1/[Q:N]) log lambda(Q,P)";
    return r;
}

OracleReport verify_bdlr(const QuadrupleSpec& spec, double tolerance) {
    require_crossed(spec, "verify_bdlr");
    const Rational norm = core_invariants(spec).norm_lambda;
    const RealMatrix join = projection_join(jones_projection(spec.upper_left), jones_projection(spec.upper_right));
    bool idempotent = true;
    double defect = 0;
    double min_gap = std::numeric_limits<double>::infinity();
    for (PairOrder order : {PairOrder::PQ, PairOrder::QP}) {
        const DenseOperator q = auxiliary_operator(spec, order) * (1 / norm);
        const DenseOperator square_minus = q * q - q;
        idempotent = idempotent && square_minus.is_zero();
        defect = std::max(defect, square_minus.to_real().norm());
        min_gap = std::min(min_gap, min_eigenvalue(RealMatrix(q.to_real() - join)));
    }
    OracleReport r;
    r.quantity = "auxiliary_projection_dominance";
    r.kind = CheckKind::lower_bound;
    r.closed_form = 0;
    r.oracle_value = min_gap;
    r.oracle_values = {min_gap, defect};
    r.tolerance = tolerance;
    r.samples = 2;
    r.passed = idempotent && defect <= tolerance && comparison_holds(r.kind, 0.0, min_gap, tolerance);
    r.detail = std::string(idempotent ? "exact idempotent" : "NOT idempotent") + ", min eig(q - e_P v e_Q) " + fmt(min_gap);
    return r;
}

OracleReport verify_auxiliary_norm(const QuadrupleSpec& spec, double tolerance) {
    require_crossed(spec, "verify_auxiliary_norm");
    const Rational norm = core_invariants(spec).norm_lambda;
    const DenseOperator p_pq = auxiliary_operator(spec, PairOrder::PQ);
    const DenseOperator p_qp = auxiliary_operator(spec, PairOrder::QP);
    const bool swapped = modular_conjugation(spec.group).conjugate(p_pq) == p_qp;
    const double n_pq = operator_norm(p_pq);
    const double n_qp = operator_norm(p_qp);
    OracleReport r;
    r.quantity = "auxiliary_norm";
    r.kind = CheckKind::two_sided;
    r.closed_form = norm.get_d();
    r.oracle_value = n_pq;
    r.oracle_values = {n_pq, n_qp};
    r.tolerance = tolerance;
    r.samples = 1;
    r.passed = swapped && comparison_holds(r.kind, r.closed_form, n_pq, tolerance) &&
               comparison_holds(r.kind, r.closed_form, n_qp, tolerance);
    r.detail = std::string("||p(P,Q)|| vs [M:N] tr(e_P e_Q); J p(P,Q) J ") + (swapped ? "=" : "!=") + " p(Q,P)";
    return r;
}

OracleReport verify_fact_identities(const QuadrupleSpec& spec) {
    const QuadrupleInvariants core = core_invariants(spec);
    const IndexData& idx = core.indices;
    std::vector<std::string> failures;
    if (idx.M_P * idx.P_N != idx.M_N) failures.push_back("[M:P][P:N] != [M:N]");
    if (idx.M_Q * idx.Q_N != idx.M_N) failures.push_back("[M:Q][Q:N] != [M:N]");
    const Rational via_p = idx.M_P / idx.Q_N * core.trace_ePeQ;
    const Rational via_q = idx.M_Q / idx.P_N * core.trace_ePeQ;
    if (via_p != via_q) failures.push_back("[M:P]/[Q:N] tr != [M:Q]/[P:N] tr");

    QuadrupleInvariants dual, down;
    try {
        dual = dual_of(core);
        down = downward_of(core);
    } catch (const ConsistencyError& e) {
        failures.push_back(e.what());
    }
    if (failures.empty()) {
        if (dual.trace_ePeQ != via_p) failures.push_back("dual trace mismatch");
        if (down.trace_ePeQ != via_q) failures.push_back("downward trace mismatch");
        if (down.indices.P_N != idx.M_P || down.indices.Q_N != idx.M_Q) failures.push_back("[P-1:N-1] != [M:P]");
        if (dual.lambda_PQ != core.lambda_QP || dual.lambda_QP != core.lambda_PQ) failures.push_back("dual lambda");
        if (down.lambda_PQ != core.lambda_QP || down.lambda_QP != core.lambda_PQ) failures.push_back("downward lambda");
        if (dual_of(dual) != core) failures.push_back("dual of dual differs");
    }
    OracleReport r;
    r.quantity = "fact_identities";
    r.kind = CheckKind::exact;
    r.closed_form = 0;
    r.oracle_value = static_cast<double>(failures.size());
    r.oracle_values = {via_p.get_d(), via_q.get_d()};
    r.tolerance = 0;
    r.samples = 1;
    r.passed = failures.empty();
    if (failures.empty()) {
        r.detail = "dual/downward trace " + to_string(via_p);
    } else {
        for (const auto& f : failures) r.detail += (r.detail.empty() ? "" : "; ") + f;
    }
    return r;
}

MatrixRoute matrix_route(const QuadrupleSpec& spec) {
    require_crossed(spec, "matrix_route");
    const DenseOperator ep = jones_projection(spec.upper_left);
    const DenseOperator eq = jones_projection(spec.upper_right);
    MatrixRoute m;
    m.trace_ePeQ = (ep * eq).normalized_trace();
    m.trace_eP = ep.normalized_trace();
    m.trace_eQ = eq.normalized_trace();
    m.lambda_PQ = m.trace_ePeQ / m.trace_eP;
    m.lambda_QP = m.trace_ePeQ / m.trace_eQ;
    m.norm_PQ = operator_norm(auxiliary_operator(spec, PairOrder::PQ));
    m.norm_QP = operator_norm(auxiliary_operator(spec, PairOrder::QP));
    return m;
}

OracleReport verify_matrix_route(const QuadrupleSpec& spec) {
    const MatrixRoute m = matrix_route(spec);
    const QuadrupleInvariants core = core_invariants(spec);
    const bool ok = m.trace_ePeQ == core.trace_ePeQ && m.lambda_PQ == core.lambda_PQ && m.lambda_QP == core.lambda_QP;
    OracleReport r;
    r.quantity = "matrix_route";
    r.kind = CheckKind::exact;
    r.closed_form = 0;
    r.oracle_value = ok ? 0.0 : 1.0;
    r.oracle_values = {m.trace_ePeQ.get_d(), m.lambda_PQ.get_d(), m.lambda_QP.get_d()};
    r.tolerance = 0;
    r.samples = 1;
    r.passed = ok;
    r.detail = "tr(e_P e_Q) = " + to_string(m.trace_ePeQ) + ", lambda_PQ = " + to_string(m.lambda_PQ) +
               ", lambda_QP = " + to_string(m.lambda_QP);
    return r;
}

OracleReport verify_square_criteria(const QuadrupleSpec& spec) {
    const SquareClassification c = classify_square(spec);
    OracleReport r;
    r.quantity = "square_criteria";
    r.kind = CheckKind::exact;
    r.oracle_value = c.agree ? 0.0 : 1.0;
    r.samples = 1;
    r.passed = c.agree;
    auto flags = [](const SquareFlags& f) {
        return std::string("commuting=") + (f.commuting ? "1" : "0") + " cocommuting=" + (f.cocommuting ? "1" : "0") +
               " P<=Q=" + (f.P_subset_Q ? "1" : "0") + " Q<=P=" + (f.Q_subset_P ? "1" : "0");
    };
    r.detail = "group: " + flags(c.by_group) + "; lambda: " + flags(c.by_lambda);
    return r;
}

OracleReport verify_bounds(const QuadrupleSpec& spec) {
    const BoundsCheck b = bounds_check(spec);
    OracleReport r;
    r.quantity = "lambda_bounds";
    r.kind = CheckKind::exact;
    r.oracle_value = static_cast<double>(b.violations.size());
    r.samples = 1;
    r.passed = b.passed;
    for (const auto& s : b.passed ? b.active : b.violations) r.detail += (r.detail.empty() ? "" : "; ") + s;
    if (r.detail.empty()) r.detail = "no bound tight";
    return r;
}

std::vector<OracleReport> run_oracle_suite(const QuadrupleSpec& spec, const OracleOptions& options) {
    std::vector<OracleReport> reports;
    reports.push_back(verify_fact_identities(spec));
    reports.push_back(verify_square_criteria(spec));
    reports.push_back(verify_bounds(spec));
    if (spec.picture != Picture::crossed) return reports;
    const double tol = options.tolerance;
    reports.push_back(verify_matrix_route(spec));
    reports.push_back(verify_auxiliary_norm(spec, tol));
    reports.push_back(verify_bdlr(spec, tol));
    reports.push_back(biprojection_partition_check(spec, tol));
    for (PairOrder order : {PairOrder::QP, PairOrder::PQ})
        reports.push_back(
            partition_entropy_sample(spec, order, options.partitions, options.seed, tol, options.threads));
    if (!spec.base.is_trivial()) return reports;
    for (PairOrder order : {PairOrder::PQ, PairOrder::QP}) {
        reports.push_back(lambda_witness(spec, order, tol));
        reports.push_back(lambda_positivity_sample(spec, options.positivity_samples, options.seed, order,
                                                   std::nullopt, tol, options.threads));
    }
    reports.push_back(verify_liu(spec, tol));
    return reports;
}

}  // namespace quadrant
