#include "quadrant/report.hpp"

#include "quadrant/error.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace quadrant {

using nlohmann::json;

namespace {

// Slot names of a quadruple N ⊂ P, Q ⊂ M as they appear in field names.
struct SlotNames {
    std::string N, P, Q, M;
};

const SlotNames kCore{"N", "P", "Q", "M"};
const SlotNames kDual{"M", "P1", "Q1", "M1"};
const SlotNames kDownward{"Nm1", "Pm1", "Qm1", "N"};

void write_invariants(json& j, const QuadrupleInvariants& q, const SlotNames& s) {
    j["indices"] = {
        {s.M + "_" + s.N, rational_json(q.indices.M_N)}, {s.P + "_" + s.N, rational_json(q.indices.P_N)},
        {s.Q + "_" + s.N, rational_json(q.indices.Q_N)}, {s.M + "_" + s.P, rational_json(q.indices.M_P)},
        {s.M + "_" + s.Q, rational_json(q.indices.M_Q)},
    };
    j["trace_e" + s.P + "e" + s.Q] = rational_json(q.trace_ePeQ);
    j["lambda_" + s.P + s.Q] = rational_json(q.lambda_PQ);
    j["lambda_" + s.Q + s.P] = rational_json(q.lambda_QP);
    j["norm_lambda"] = rational_json(q.norm_lambda);
    j["entropy_" + s.P + s.Q + "_nats"] = q.entropy_PQ;
    j["entropy_" + s.Q + s.P + "_nats"] = q.entropy_QP;
}

QuadrupleInvariants read_invariants(const json& j, const SlotNames& s) {
    QuadrupleInvariants q;
    const json& idx = j.at("indices");
    q.indices.M_N = rational_from_json(idx.at(s.M + "_" + s.N));
    q.indices.P_N = rational_from_json(idx.at(s.P + "_" + s.N));
    q.indices.Q_N = rational_from_json(idx.at(s.Q + "_" + s.N));
    q.indices.M_P = rational_from_json(idx.at(s.M + "_" + s.P));
    q.indices.M_Q = rational_from_json(idx.at(s.M + "_" + s.Q));
    q.trace_ePeQ = rational_from_json(j.at("trace_e" + s.P + "e" + s.Q));
    q.lambda_PQ = rational_from_json(j.at("lambda_" + s.P + s.Q));
    q.lambda_QP = rational_from_json(j.at("lambda_" + s.Q + s.P));
    q.norm_lambda = rational_from_json(j.at("norm_lambda"));
    q.entropy_PQ = j.at("entropy_" + s.P + s.Q + "_nats").get<double>();
    q.entropy_QP = j.at("entropy_" + s.Q + s.P + "_nats").get<double>();
    return q;
}

json subgroup_json(const SubgroupSummary& s) {
    return {{"order", s.order}, {"generators", s.generators}, {"members", s.members}};
}

SubgroupSummary subgroup_from_json(const json& j) {
    return SubgroupSummary{j.at("order").get<std::size_t>(), j.at("generators").get<std::string>(),
                           j.at("members").get<std::vector<std::size_t>>()};
}

std::string real_text(double v) {
    std::ostringstream out;
    out << std::setprecision(17) << v;
    return out.str();
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

ReportFormat parse_format(std::string_view text) {
    if (text == "human") return ReportFormat::human;
    if (text == "json") return ReportFormat::json;
    if (text == "csv") return ReportFormat::csv;
    throw InputError("format must be human, json or csv");
}

json rational_json(const Rational& r) { return {{"exact", to_string(r)}, {"float", r.get_d()}}; }

Rational rational_from_json(const json& j) { return parse_rational(j.at("exact").get<std::string>()); }

json to_json(const InvariantReport& r) {
    json j;
    j["schema"] = kSchemaVersion;
    j["picture"] = to_string(r.picture);
    j["group"] = {{"order", r.group_order}, {"degree", r.group_degree}};
    j["H"] = subgroup_json(r.H);
    j["K"] = subgroup_json(r.K);
    j["L"] = subgroup_json(r.L);
    write_invariants(j, r.core, kCore);
    j["commuting"] = r.flags.commuting;
    j["cocommuting"] = r.flags.cocommuting;
    j["P_subset_Q"] = r.flags.P_subset_Q;
    j["Q_subset_P"] = r.flags.Q_subset_P;
    j["index2"] = to_string(r.index2);
    json dual, down;
    write_invariants(dual, r.dual, kDual);
    write_invariants(down, r.downward, kDownward);
    j["dual"] = std::move(dual);
    j["downward"] = std::move(down);
    return j;
}

InvariantReport report_from_json(const json& j) {
    if (j.at("schema").get<int>() != kSchemaVersion) throw InputError("unsupported report schema");
    InvariantReport r;
    r.picture = parse_picture(j.at("picture").get<std::string>());
    r.group_order = j.at("group").at("order").get<std::size_t>();
    r.group_degree = j.at("group").at("degree").get<int>();
    r.H = subgroup_from_json(j.at("H"));
    r.K = subgroup_from_json(j.at("K"));
    r.L = subgroup_from_json(j.at("L"));
    r.core = read_invariants(j, kCore);
    r.flags.commuting = j.at("commuting").get<bool>();
    r.flags.cocommuting = j.at("cocommuting").get<bool>();
    r.flags.P_subset_Q = j.at("P_subset_Q").get<bool>();
    r.flags.Q_subset_P = j.at("Q_subset_P").get<bool>();
    r.index2 = parse_index2_class(j.at("index2").get<std::string>());
    r.dual = read_invariants(j.at("dual"), kDual);
    r.downward = read_invariants(j.at("downward"), kDownward);
    return r;
}

json to_json(const OracleReport& r) {
    return {{"quantity", r.quantity},       {"kind", to_string(r.kind)},         {"closed_form", r.closed_form},
            {"oracle_value", r.oracle_value}, {"oracle_values", r.oracle_values}, {"tolerance", r.tolerance},
            {"samples", r.samples},         {"seed", r.seed},                    {"verdict", r.passed ? "pass" : "fail"},
            {"detail", r.detail}};
}

OracleReport oracle_report_from_json(const json& j) {
    OracleReport r;
    r.quantity = j.at("quantity").get<std::string>();
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "two_sided") r.kind = CheckKind::two_sided;
    else if (kind == "lower_bound") r.kind = CheckKind::lower_bound;
    else if (kind == "upper_bound") r.kind = CheckKind::upper_bound;
    else if (kind == "exact") r.kind = CheckKind::exact;
    else throw InputError("unknown check kind '" + kind + "'");
    r.closed_form = j.at("closed_form").get<double>();
    r.oracle_value = j.at("oracle_value").get<double>();
    r.oracle_values = j.at("oracle_values").get<std::vector<double>>();
    r.tolerance = j.at("tolerance").get<double>();
    r.samples = j.at("samples").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.passed = j.at("verdict").get<std::string>() == "pass";
    r.detail = j.at("detail").get<std::string>();
    return r;
}

std::string csv_header() {
    return "picture,group_order,H_order,K_order,L_order,H_generators,K_generators,L_generators,"
           "index_MN,index_PN,index_QN,index_MP,index_MQ,trace_ePeQ,lambda_PQ,lambda_QP,norm_lambda,"
           "entropy_PQ_nats,entropy_QP_nats,commuting,cocommuting,P_subset_Q,Q_subset_P,index2";
}

std::string csv_row(const InvariantReport& r) {
    const auto& q = r.core;
    std::ostringstream out;
    out << to_string(r.picture) << ',' << r.group_order << ',' << r.H.order << ',' << r.K.order << ',' << r.L.order
        << ',' << csv_field(r.H.generators) << ',' << csv_field(r.K.generators) << ',' << csv_field(r.L.generators)
        << ',' << to_string(q.indices.M_N) << ',' << to_string(q.indices.P_N) << ',' << to_string(q.indices.Q_N)
        << ',' << to_string(q.indices.M_P) << ',' << to_string(q.indices.M_Q) << ',' << to_string(q.trace_ePeQ)
        << ',' << to_string(q.lambda_PQ) << ',' << to_string(q.lambda_QP) << ',' << to_string(q.norm_lambda) << ','
        << real_text(q.entropy_PQ) << ',' << real_text(q.entropy_QP) << ',' << yes_no(r.flags.commuting) << ','
        << yes_no(r.flags.cocommuting) << ',' << yes_no(r.flags.P_subset_Q) << ',' << yes_no(r.flags.Q_subset_P)
        << ',' << to_string(r.index2);
    return out.str();
}

std::string emit_report(const InvariantReport& r, ReportFormat format, const std::optional<MatrixRoute>& route) {
    if (format == ReportFormat::json) return to_json(r).dump(2) + "\n";
    if (format == ReportFormat::csv) return csv_header() + "\n" + csv_row(r) + "\n";

    std::ostringstream out;
    out << "quadruple (" << to_string(r.picture) << ")  |G| = " << r.group_order << "\n"
        << "  H = <" << r.H.generators << ">  order " << r.H.order << "\n"
        << "  K = <" << r.K.generators << ">  order " << r.K.order << "\n"
        << "  L = <" << r.L.generators << ">  order " << r.L.order << "\n\n";
    const auto& q = r.core;
    auto row = [&](const std::string& name, const std::string& closed, const std::string& matrix) {
        out << "  " << std::left << std::setw(22) << name << std::setw(24) << closed << matrix << "\n";
    };
    row("quantity", "closed form", route ? "matrix route" : "");
    row("[M:N]", to_string(q.indices.M_N), "");
    row("[P:N]", to_string(q.indices.P_N), "");
    row("[Q:N]", to_string(q.indices.Q_N), "");
    row("[M:P]", to_string(q.indices.M_P), "");
    row("[M:Q]", to_string(q.indices.M_Q), "");
    row("tr(e_P e_Q)", to_string(q.trace_ePeQ), route ? to_string(route->trace_ePeQ) : "");
    row("lambda(P,Q)", to_string(q.lambda_PQ), route ? to_string(route->lambda_PQ) : "");
    row("lambda(Q,P)", to_string(q.lambda_QP), route ? to_string(route->lambda_QP) : "");
    row("||p(P,Q)||", to_string(q.norm_lambda), route ? real_text(route->norm_PQ) : "");
    row("||p(Q,P)||", to_string(q.norm_lambda), route ? real_text(route->norm_QP) : "");
    row("H(P|Q) [nats]", real_text(q.entropy_PQ), route ? real_text(0.0 - std::log(route->lambda_PQ.get_d())) : "");
    row("H(Q|P) [nats]", real_text(q.entropy_QP), route ? real_text(0.0 - std::log(route->lambda_QP.get_d())) : "");
    out << "\n  commuting " << yes_no(r.flags.commuting) << ", cocommuting " << yes_no(r.flags.cocommuting)
        << ", P<=Q " << yes_no(r.flags.P_subset_Q) << ", Q<=P " << yes_no(r.flags.Q_subset_P) << ", index-2 "
        << to_string(r.index2) << "\n";
    out << "  dual (M,P1,Q1,M1):       tr(e_P1 e_Q1) = " << to_string(r.dual.trace_ePeQ)
        << ", lambda(P1,Q1) = " << to_string(r.dual.lambda_PQ) << ", lambda(Q1,P1) = " << to_string(r.dual.lambda_QP)
        << "\n";
    out << "  downward (N-1,P-1,Q-1,N): tr(e_P-1 e_Q-1) = " << to_string(r.downward.trace_ePeQ)
        << ", lambda(P-1,Q-1) = " << to_string(r.downward.lambda_PQ)
        << ", lambda(Q-1,P-1) = " << to_string(r.downward.lambda_QP) << "\n";
    return out.str();
}

std::string emit_oracle_reports(const std::vector<OracleReport>& reports, ReportFormat format) {
    bool all = true;
    for (const auto& r : reports) all = all && r.passed;
    if (format == ReportFormat::json) {
        json list = json::array();
        for (const auto& r : reports) list.push_back(to_json(r));
        return json{{"schema", kSchemaVersion}, {"passed", all}, {"reports", list}}.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == ReportFormat::csv) {
        out << "quantity,kind,closed_form,oracle_value,tolerance,samples,seed,verdict,detail\n";
        for (const auto& r : reports)
            out << r.quantity << ',' << to_string(r.kind) << ',' << real_text(r.closed_form) << ','
                << real_text(r.oracle_value) << ',' << real_text(r.tolerance) << ',' << r.samples << ',' << r.seed
                << ',' << (r.passed ? "pass" : "fail") << ',' << csv_field(r.detail) << "\n";
        return out.str();
    }
    for (const auto& r : reports) {
        out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(36) << r.quantity << " closed "
            << std::setw(22) << real_text(r.closed_form) << " oracle " << std::setw(22) << real_text(r.oracle_value)
            << " tol " << r.tolerance << "  " << r.detail << "\n";
    }
    out << (all ? "all verdicts pass" : "some verdicts FAIL") << "\n";
    return out.str();
}

}  // namespace quadrant
