#include "quadrant/cli.hpp"

#include "quadrant/error.hpp"
#include "quadrant/parallel.hpp"
#include "quadrant/permutation.hpp"
#include "quadrant/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace quadrant::cli {

namespace {

// Matrix-route columns in the human table are skipped above this order; the
// exact auxiliary operator is |G|^2 rationals.
constexpr std::size_t kMatrixRouteCap = 64;

struct JobSpec {
    std::string group;
    std::string H, K, L;
    std::string picture = "crossed";
    std::string format = "human";
    bool allow_degenerate = false;
    std::size_t samples = 1000;
    std::size_t partitions = 200;
    std::uint64_t seed = 7;
    double tolerance = 1e-9;
    unsigned threads = 0;
};

GroupPtr parse_group(const std::string& text, const GroupLimits& limits) {
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '(') {
        const auto parts = split_generator_list(text);
        const int degree = std::max(1, max_point(text));
        std::vector<Permutation> gens;
        for (const auto& part : parts) gens.push_back(parse_permutation(part, degree));
        return group_from_generators(gens, degree, limits);
    }
    return named_group(text, limits);
}

QuadrupleSpec build_spec(const JobSpec& job, const GroupLimits& limits) {
    auto group = parse_group(job.group, limits);
    return make_quadruple(group, subgroup_from_text(group, job.H), subgroup_from_text(group, job.K),
                          subgroup_from_text(group, job.L), parse_picture(job.picture),
                          job.allow_degenerate ? Strictness::allow_degenerate : Strictness::strict);
}

int do_info(const JobSpec& job, std::ostream& out) {
    const auto spec = build_spec(job, GroupLimits::from_environment());
    const auto report = invariant_report(spec);
    const auto format = parse_format(job.format);
    std::optional<MatrixRoute> route;
    if (format == ReportFormat::human && spec.picture == Picture::crossed && spec.group_order() <= kMatrixRouteCap)
        route = matrix_route(spec);
    out << emit_report(report, format, route);
    return kExitOk;
}

std::string scan_human_row(const InvariantReport& r) {
    std::ostringstream row;
    row << std::left << std::setw(4) << r.H.order << std::setw(4) << r.K.order << std::setw(20)
        << ("<" + r.H.generators + ">").substr(0, 19) << std::setw(20) << ("<" + r.K.generators + ">").substr(0, 19)
        << std::setw(10) << to_string(r.core.lambda_PQ) << std::setw(10) << to_string(r.core.lambda_QP)
        << std::setw(12) << std::setprecision(6) << r.core.entropy_PQ << std::setw(12) << r.core.entropy_QP
        << (r.flags.commuting ? "C" : "-") << (r.flags.cocommuting ? "c" : "-") << (r.flags.P_subset_Q ? "<" : "-")
        << (r.flags.Q_subset_P ? ">" : "-");
    return row.str();
}

int do_scan(const JobSpec& job, std::ostream& out) {
    const auto limits = GroupLimits::from_environment();
    auto group = parse_group(job.group, limits);
    const auto picture = parse_picture(job.picture);
    const auto base = subgroup_from_text(group, job.L);
    const auto format = parse_format(job.format);

    const auto subgroups = enumerate_subgroups(group, limits);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        if (!base.is_subgroup_of(subgroups[i])) continue;
        for (std::size_t j = 0; j < subgroups.size(); ++j)
            if (base.is_subgroup_of(subgroups[j])) pairs.emplace_back(i, j);
    }
    const auto reports = parallel_map(pairs.size(), resolve_threads(job.threads), [&](std::size_t n) {
        const auto& [i, j] = pairs[n];
        return invariant_report(
            make_quadruple(group, subgroups[i], subgroups[j], base, picture, Strictness::allow_degenerate));
    });

    if (format == ReportFormat::csv) {
        out << csv_header() << "\n";
        for (const auto& r : reports) out << csv_row(r) << "\n";
    } else if (format == ReportFormat::json) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& r : reports) list.push_back(to_json(r));
        out << nlohmann::json{{"schema", kSchemaVersion}, {"rows", list}}.dump(2) << "\n";
    } else {
        out << std::left << std::setw(4) << "|H|" << std::setw(4) << "|K|" << std::setw(20) << "H" << std::setw(20)
            << "K" << std::setw(10) << "l(P,Q)" << std::setw(10) << "l(Q,P)" << std::setw(12) << "H(P|Q)"
            << std::setw(12) << "H(Q|P)" << "flags\n";
        for (const auto& r : reports) out << scan_human_row(r) << "\n";
        out << reports.size() << " pairs; flags: C commuting, c cocommuting, < P in Q, > Q in P\n";
    }
    return kExitOk;
}

int do_verify(const JobSpec& job, std::ostream& out) {
    const auto spec = build_spec(job, GroupLimits::from_environment());
    OracleOptions options;
    options.positivity_samples = job.samples;
    options.partitions = job.partitions;
    options.seed = job.seed;
    options.tolerance = job.tolerance;
    options.threads = resolve_threads(job.threads);
    const auto reports = run_oracle_suite(spec, options);
    out << emit_oracle_reports(reports, parse_format(job.format));
    for (const auto& r : reports)
        if (!r.passed) return kExitVerifyFailed;
    return kExitOk;
}

void add_quadruple_options(CLI::App* sub, JobSpec& job) {
    sub->add_option("--group", job.group, "named group (C6, D4, S3, A4, V4, Q8) or generator list")->required();
    sub->add_option("--H", job.H, "generators of H; empty for trivial");
    sub->add_option("--K", job.K, "generators of K; empty for trivial");
    sub->add_option("--L", job.L, "generators of L; empty for trivial");
    sub->add_option("--picture", job.picture, "crossed or fixed")->check(CLI::IsMember({"crossed", "fixed"}));
    sub->add_option("--format", job.format, "human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));
    sub->add_option("--threads", job.threads, "worker threads, 0 for all cores");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of subfactor quadruples from finite group data", "quadrant"};
    app.require_subcommand(1);
    JobSpec job;

    auto* info = app.add_subcommand("info", "invariant report for one quadruple");
    add_quadruple_options(info, job);
    info->add_flag("--allow-degenerate", job.allow_degenerate, "accept trivial H or K in the crossed picture");

    auto* scan = app.add_subcommand("scan", "all subgroup pairs H, K containing L");
    scan->add_option("--group", job.group, "named group or generator list")->required();
    scan->add_option("--L", job.L, "generators of L; empty for trivial");
    scan->add_option("--picture", job.picture, "crossed or fixed")->check(CLI::IsMember({"crossed", "fixed"}));
    scan->add_option("--format", job.format, "human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));
    scan->add_option("--threads", job.threads, "worker threads, 0 for all cores");

    auto* verify = app.add_subcommand("verify", "run the oracle suite");
    add_quadruple_options(verify, job);
    verify->add_flag("--allow-degenerate", job.allow_degenerate, "accept trivial H or K in the crossed picture");
    verify->add_option("--samples", job.samples, "positivity samples per ordered pair");
    verify->add_option("--partitions", job.partitions, "random partitions of unity per ordered pair");
    verify->add_option("--seed", job.seed, "base seed");
    verify->add_option("--tolerance", job.tolerance, "float tolerance")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitInputError;
    }

    try {
        if (info->parsed()) return do_info(job, out);
        if (scan->parsed()) return do_scan(job, out);
        return do_verify(job, out);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ConsistencyError& e) {
        err << "consistency error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
}

}  // namespace quadrant::cli
