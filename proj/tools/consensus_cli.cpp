// consensus: command-line front end for group homogeneity analysis.
//
// Exit codes: 0 success, 2 input error (unreadable, malformed or invalid
// input), 3 domain error (the computation is undefined for the input).

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "consensus/ahp.hpp"
#include "consensus/diversity.hpp"
#include "consensus/homogeneity.hpp"
#include "consensus/io.hpp"
#include "consensus/worked_example.hpp"

namespace {

using namespace consensus;

constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

struct SessionOptions {
    std::string session_path;
    std::string mode;
    std::string format = "json";
    std::string out_path;
};

ReportFormat report_format(const std::string& name) {
    if (name == "csv") return ReportFormat::CsvTables;
    if (name == "md") return ReportFormat::Markdown;
    return ReportFormat::Json;
}

/// Flags override the session file's config.
DecisionSession load_with_overrides(const std::string& path, const std::string& mode) {
    DecisionSession session = load_session(path);
    if (mode.empty()) return session;
    const auto& c = session.config();
    const NormalizationMode m = mode == "per-learner" ? NormalizationMode::PerLearner : NormalizationMode::PerAlternative;
    return session.with_config(PipelineConfig(m, c.participant_weights(), c.likert(), c.consensus_threshold()));
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write '" + out_path + "'");
    out << text;
}

void add_session_options(CLI::App& cmd, SessionOptions& opts) {
    cmd.add_option("--session", opts.session_path, "Session JSON file");
    cmd.add_option("--mode", opts.mode, "Distance normalization (default: from the session file)")
        ->check(CLI::IsMember({"per-alternative", "per-learner"}));
    cmd.add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "csv", "md"}));
    cmd.add_option("--out", opts.out_path, "Write the report here instead of stdout");
}

std::string delta_note(double published, double computed, double tolerance) {
    return std::abs(published - computed) <= tolerance ? "match" : "DIFFERS";
}

int reproduce_worked_example() {
    namespace we = worked_example;
    std::ostringstream out;
    out << std::fixed << std::setprecision(4);

    out << "Participant indices from the published distance distributions\n"
        << "participant  quantity     published  computed  status\n";
    const char* names[] = {"L1", "L2", "L3"};
    for (std::size_t k = 0; k < we::kParticipants; ++k) {
        const DiversityIndices d = diversity_indices(we::kPrintedProbabilities[k], we::kAlternatives);
        const auto& p = we::kPrintedIndices[k];
        const std::pair<const char*, std::pair<double, double>> rows[] = {
            {"entropy   ", {p.entropy, d.entropy}},
            {"diversity ", {p.diversity, d.first_order_diversity}},
            {"uniformity", {p.uniformity, d.uniformity}},
        };
        for (const auto& [label, values] : rows) {
            out << names[k] << "           " << label << "   " << std::setw(7) << values.first << "    "
                << std::setw(7) << values.second << "  " << delta_note(values.first, values.second, 1e-3) << '\n';
        }
    }

    const BetaPartition chain = beta_partition(we::kPrintedAlphaEntropy, we::kPrintedGammaEntropy);
    out << "\nGroup chain from the published alpha/gamma entropies (" << we::kPrintedAlphaEntropy << ", "
        << we::kPrintedGammaEntropy << ")\n"
        << "beta entropy    published " << we::kPrintedBetaEntropy << "  computed " << chain.beta_entropy << "  "
        << delta_note(we::kPrintedBetaEntropy, chain.beta_entropy, 1e-3) << '\n'
        << "beta diversity  published " << we::kPrintedBetaDiversity << "  computed " << chain.beta_diversity << "  "
        << delta_note(we::kPrintedBetaDiversity, chain.beta_diversity, 1e-3) << '\n'
        << "homogeneity     published " << we::kPrintedHomogeneity << "  computed " << 1.0 / chain.beta_diversity
        << "  " << delta_note(we::kPrintedHomogeneity, 1.0 / chain.beta_diversity, 1e-3) << '\n';

    const DecisionSession session = parse_session(we::kSessionJson);
    const DistanceTable distances = rank_distances(session);
    out << "\nColumn totals   published";
    for (int t : we::kPrintedColumnTotals) out << ' ' << t;
    out << "  recomputed";
    for (int t : distances.column_totals()) out << ' ' << t;
    out << "  (the published totals do not match the published distance rows)\n";

    const auto per_alt = analyze_session_with_pairwise(session);
    const auto& cfg = session.config();
    const auto per_learner = analyze_session(session.with_config(
        PipelineConfig(NormalizationMode::PerLearner, cfg.participant_weights(), cfg.likert(), cfg.consensus_threshold())));
    out << "\nEnd-to-end pipeline from the rank table (equal weights)\n"
        << "quantity        published  per_alternative  per_learner\n"
        << "alpha entropy   " << std::setw(9) << we::kPrintedAlphaEntropy << "  " << std::setw(15)
        << per_alt.alpha_entropy << "  " << std::setw(11) << per_learner.alpha_entropy << '\n'
        << "gamma entropy   " << std::setw(9) << we::kPrintedGammaEntropy << "  " << std::setw(15)
        << per_alt.gamma_entropy << "  " << std::setw(11) << per_learner.gamma_entropy << '\n'
        << "homogeneity     " << std::setw(9) << we::kPrintedHomogeneity << "  " << std::setw(15)
        << per_alt.homogeneity << "  " << std::setw(11) << per_learner.homogeneity << '\n'
        << "The published group values cannot be derived from the published inputs;\n"
        << "the pipeline values above are computed from the rank table alone.\n";

    out << "\nPairwise homogeneity (published / per_alternative)\n";
    for (std::size_t a = 0; a < we::kParticipants; ++a) {
        out << names[a];
        for (std::size_t b = 0; b < we::kParticipants; ++b) {
            out << "  " << we::kPrintedPairwise[a][b] << '/' << per_alt.pairwise->values[a][b];
        }
        out << '\n';
    }
    std::cout << out.str() << format_number(per_alt.homogeneity) << '\n';
    return 0;
}

int run_analyze(const SessionOptions& opts, bool reproduce) {
    if (reproduce) return reproduce_worked_example();
    if (opts.session_path.empty()) throw Error(ErrorKind::Io, "--session is required");
    const DecisionSession session = load_with_overrides(opts.session_path, opts.mode);
    const HomogeneityReport report = analyze_session_with_pairwise(session);
    write_output(emit_report(report, report_format(opts.format)), opts.out_path);
    std::cout << format_number(report.homogeneity) << '\n';
    return 0;
}

int run_pairwise(const SessionOptions& opts) {
    if (opts.session_path.empty()) throw Error(ErrorKind::Io, "--session is required");
    const DecisionSession session = load_with_overrides(opts.session_path, opts.mode);
    const HomogeneityReport report = analyze_session(session);
    write_output(emit_pairwise(pairwise_homogeneity(session), report_format(opts.format)), opts.out_path);
    std::cout << format_number(report.homogeneity) << '\n';
    return 0;
}

int run_ahp(const std::vector<std::string>& matrix_paths, const std::string& method, const std::string& aggregation,
            double cr_limit) {
    AhpConfig cfg;
    cfg.derivation = method == "gmean" ? DerivationMethod::GeometricMean : DerivationMethod::PrincipalEigenvector;
    cfg.aggregation = aggregation == "aij" ? AggregationMethod::ElementwiseGeometricJudgments
                                           : AggregationMethod::WeightedGeometricPriorities;
    cfg.cr_limit = cr_limit;

    std::vector<ComparisonMatrix> matrices;
    for (const auto& p : matrix_paths) matrices.push_back(load_comparison_matrix(p));

    std::string text;
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        const PriorityVector pv = derive_priorities(matrices[i], cfg);
        if (pv.consistency() && pv.consistency()->consistency_ratio > cfg.cr_limit) {
            std::cerr << "warning: " << matrix_paths[i] << ": consistency ratio "
                      << format_number(pv.consistency()->consistency_ratio) << " exceeds " << format_number(cfg.cr_limit)
                      << "; judgments may be incoherent\n";
        }
        text += emit_priorities(pv, cfg.derivation, cfg.cr_limit);
    }
    if (matrices.size() > 1) {
        const std::vector<double> weights(matrices.size(), 1.0);
        const PriorityVector group = aggregate_group(std::span<const ComparisonMatrix>(matrices), weights, cfg);
        nlohmann::ordered_json j;
        j["group_aggregation"] = aggregation;
        j["group_priorities"] = nlohmann::json::parse(emit_priorities(group, cfg.derivation, cfg.cr_limit))["priorities"];
        text += j.dump(2) + "\n";
        for (double p : group.priorities()) {
            if (p == 0.0) {
                std::cerr << "warning: a zero individual priority forced a zero group priority\n";
                break;
            }
        }
    }
    std::cout << text;
    return 0;
}

int run_summative(const std::string& project_path) {
    const ProjectRecord record = load_project(project_path);
    const SummativeResult result = summative_homogeneity(record);
    nlohmann::ordered_json j;
    j["project_id"] = record.project_id();
    nlohmann::ordered_json stages = nlohmann::ordered_json::array();
    for (const auto& s : record.stages()) {
        stages.push_back({{"stage", s.stage}, {"homogeneity", std::stod(format_number(s.homogeneity))}});
    }
    j["stages"] = stages;
    j["threshold"] = std::stod(format_number(record.threshold()));
    j["h_tot"] = std::stod(format_number(result.h_tot));
    j["verdict"] = std::string(to_string(result.verdict));
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Group consensus analytics: AHP priorities and group homogeneity indicators"};
    app.require_subcommand(1);

    SessionOptions analyze_opts;
    bool reproduce = false;
    auto* analyze = app.add_subcommand("analyze", "Homogeneity report for one decision session");
    add_session_options(*analyze, analyze_opts);
    analyze->add_flag("--reproduce-paper", reproduce,
                      "Compare computed values with the published worked example side by side");

    SessionOptions pairwise_opts;
    auto* pairwise = app.add_subcommand("pairwise", "Pairwise participant homogeneity matrix");
    add_session_options(*pairwise, pairwise_opts);

    std::vector<std::string> matrix_paths;
    std::string method = "eig";
    std::string aggregation = "aip";
    double cr_limit = 0.10;
    auto* ahp = app.add_subcommand("ahp", "Priorities and consistency of pairwise comparison matrices");
    ahp->add_option("--matrix", matrix_paths, "CSV comparison matrix; repeat to aggregate a group")->required();
    ahp->add_option("--method", method, "Priority derivation")->check(CLI::IsMember({"eig", "gmean"}));
    ahp->add_option("--aggregation", aggregation, "Group aggregation for repeated --matrix")
        ->check(CLI::IsMember({"aip", "aij"}));
    ahp->add_option("--cr-limit", cr_limit, "Consistency ratio above which a warning is printed");

    std::string project_path;
    auto* summative = app.add_subcommand("summative", "Mean homogeneity across project stages and threshold verdict");
    summative->add_option("--project", project_path, "Project JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (analyze->parsed()) return run_analyze(analyze_opts, reproduce);
        if (pairwise->parsed()) return run_pairwise(pairwise_opts);
        if (ahp->parsed()) return run_ahp(matrix_paths, method, aggregation, cr_limit);
        if (summative->parsed()) return run_summative(project_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_input_error(e.kind()) ? kExitInput : kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
