#pragma once

// Numerical cross-checks of the closed forms on the matrix model. λ is
// certified from both sides: any positive witness x gives the upper bound
// pencil_value(x) >= λ, and random positive samples probe E(x) - λx >= 0.
// Entropy is checked from below: every partition of unity gives a value that
// may not exceed the closed form.

#include "quadrant/invariants.hpp"
#include "quadrant/matrix_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quadrant {

/// How `oracle_value` is compared with `closed_form`:
///   two_sided:   |closed - oracle| <= tolerance
///   lower_bound: oracle >= closed - tolerance  (oracle bounded below by closed)
///   upper_bound: oracle <= closed + tolerance  (oracle bounded above by closed)
///   exact:       exact rational identities; oracle_value is 0 on success
enum class CheckKind { two_sided, lower_bound, upper_bound, exact };

std::string to_string(CheckKind kind);

struct OracleReport {
    std::string quantity;
    CheckKind kind = CheckKind::two_sided;
    double closed_form = 0;
    double oracle_value = 0;
    std::vector<double> oracle_values;  // per-route or auxiliary values
    double tolerance = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    bool passed = false;
    std::string detail;

    friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

/// Applies `kind` to closed_form / oracle_value / tolerance.
bool comparison_holds(CheckKind kind, double closed_form, double oracle_value, double tolerance);

struct OracleOptions {
    std::size_t positivity_samples = 1000;
    std::size_t partitions = 200;
    std::uint64_t seed = 7;
    double tolerance = 1e-9;
    unsigned threads = 1;
};

/// Largest t with E(x) - t x >= 0, where x is a PSD element of the first
/// algebra of `order` (C[H] for PQ, C[K] for QP) and E is the expectation onto
/// the second. Computed on l2 of the first subgroup; kernel directions of x
/// enter through the Schur complement of E.
double pencil_value(const RealAlgebraElement& x, const QuadrupleSpec& spec, PairOrder order = PairOrder::PQ);

/// Seeded sampling of x = a^* a, a uniform in [-1,1] on the first subgroup.
/// Passes when every sample has min eig(E(x) - claimed x) >= -tol and the
/// minimum pencil value over the samples and the witness b_H stays above
/// claimed - tol. `claimed` defaults to the closed-form λ. Requires L = {e}.
OracleReport lambda_positivity_sample(const QuadrupleSpec& spec, std::size_t n, std::uint64_t seed,
                                      PairOrder order = PairOrder::PQ, std::optional<Rational> claimed = std::nullopt,
                                      double tolerance = 1e-9, unsigned threads = 1);

/// pencil_value(b_H) against the closed-form λ (two-sided). Requires L = {e}.
OracleReport lambda_witness(const QuadrupleSpec& spec, PairOrder order = PairOrder::PQ, double tolerance = 1e-9);

/// A finite family of PSD operators in the regular-representation image
/// summing to the identity.
class PartitionOfUnity {
public:
    /// Validates PSD parts (>= -tol), Σ parts = 1 entrywise within tol, and
    /// membership in the group-algebra image.
    static PartitionOfUnity from_operators(GroupPtr group, std::vector<RealMatrix> parts, double tolerance = 1e-9);
    static PartitionOfUnity from_elements(GroupPtr group, std::vector<RealAlgebraElement> parts,
                                          double tolerance = 1e-9);

    const GroupPtr& group() const { return group_; }
    const std::vector<RealMatrix>& parts() const { return parts_; }
    const std::vector<RealAlgebraElement>& elements() const { return elements_; }
    std::size_t size() const { return parts_.size(); }

private:
    PartitionOfUnity(GroupPtr group, std::vector<RealMatrix> parts, std::vector<RealAlgebraElement> elements)
        : group_(std::move(group)), parts_(std::move(parts)), elements_(std::move(elements)) {}

    GroupPtr group_;
    std::vector<RealMatrix> parts_;
    std::vector<RealAlgebraElement> elements_;
};

/// m parts: s^{-1/2} y_i s^{-1/2} for y_0 = 1e-6 and y_i = a_i^* a_i with a_i
/// uniform in [-1,1] on G, s = Σ y_i. Resamples up to 10 times on rounding
/// failures.
PartitionOfUnity random_partition(const GroupPtr& group, std::size_t m, std::uint64_t seed);

/// {b_K, 1 - b_K}
PartitionOfUnity biprojection_partition(const Subgroup& k);

/// Σ_i tr η(E_S(x_i)) over the parts.
double partition_eta_profile(const PartitionOfUnity& partition, const Subgroup& s);

/// Part count and partition seed used for the index-th draw of a sampling run.
std::size_t partition_size_for(std::uint64_t seed, std::size_t index);
std::uint64_t partition_seed_for(std::uint64_t seed, std::size_t index);

/// For order QP (H(Q|P)): Σ_i tr η(E_P(x_i)) - tr η(E_Q(x_i)); for PQ the
/// roles swap. Crossed picture only.
double partition_entropy_value(const PartitionOfUnity& partition, const QuadrupleSpec& spec, PairOrder order);

/// `count` random partitions (2 to 5 parts each): every value must stay at
/// or below the closed-form entropy plus tolerance.
OracleReport partition_entropy_sample(const QuadrupleSpec& spec, PairOrder order, std::size_t count,
                                      std::uint64_t seed, double tolerance = 1e-9, unsigned threads = 1);

/// The {b_K, 1 - b_K} partition for H(Q|P): bounded by the closed form and
/// strictly positive exactly when K is not contained in H.
OracleReport biprojection_partition_check(const QuadrupleSpec& spec, double tolerance = 1e-9);

/// tr η(E_P(b_K)) = -(1/[Q:N]) log λ(Q,P). Requires L = {e}.
OracleReport verify_liu(const QuadrupleSpec& spec, double tolerance = 1e-9);

/// (1/λ) p is an exact idempotent dominating e_P ∨ e_Q, for p(P,Q) and p(Q,P).
OracleReport verify_bdlr(const QuadrupleSpec& spec, double tolerance = 1e-9);

/// ||p(P,Q)|| against [M:N] tr(e_P e_Q), plus J p(P,Q) J = p(Q,P) exactly.
OracleReport verify_auxiliary_norm(const QuadrupleSpec& spec, double tolerance = 1e-9);

/// Index multiplicativity and the dual/downward trace identities, exactly.
OracleReport verify_fact_identities(const QuadrupleSpec& spec);

/// Closed-form values recomputed from the matrix model (crossed picture).
struct MatrixRoute {
    Rational trace_ePeQ;
    Rational trace_eP;
    Rational trace_eQ;
    Rational lambda_PQ;
    Rational lambda_QP;
    double norm_PQ = 0;
    double norm_QP = 0;
};

MatrixRoute matrix_route(const QuadrupleSpec& spec);

/// Exact agreement of matrix_route with the group formulas.
OracleReport verify_matrix_route(const QuadrupleSpec& spec);

/// Group-criterion flags against the λ identities, as a report.
OracleReport verify_square_criteria(const QuadrupleSpec& spec);

/// The λ bound chains, as a report.
OracleReport verify_bounds(const QuadrupleSpec& spec);

/// Everything that applies to the spec's picture and base.
std::vector<OracleReport> run_oracle_suite(const QuadrupleSpec& spec, const OracleOptions& options);

}  // namespace quadrant
