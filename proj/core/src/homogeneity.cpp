#include "consensus/homogeneity.hpp"

#include <cmath>
#include <cstdlib>
#include <algorithm>
#include <future>
#include <thread>
#include <sstream>

#include "consensus/diversity.hpp"

namespace consensus {

namespace {

std::string format_value(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

}  // namespace

DistanceTable rank_distances(const RankVector& group, std::span<const RankVector> individual) {
    std::vector<std::vector<int>> distances;
    distances.reserve(individual.size());
    for (const auto& ranks : individual) {
        if (ranks.size() != group.size()) {
            throw Error(ErrorKind::DimensionMismatch, "rank vector length differs from group ranking");
        }
        std::vector<int> row(group.size());
        for (std::size_t i = 0; i < group.size(); ++i) row[i] = std::abs(group[i] - ranks[i]);
        distances.push_back(std::move(row));
    }
    return DistanceTable(std::move(distances));
}

DistanceTable rank_distances(const DecisionSession& session) {
    return rank_distances(session.group_ranks(), session.individual_ranks());
}

ProbabilityTable distance_distribution(const DistanceTable& table, NormalizationMode mode) {
    const std::size_t rows = table.rows();
    const std::size_t cols = table.cols();
    std::vector<std::vector<double>> p(rows, std::vector<double>(cols, 0.0));
    std::vector<std::size_t> zero_lines;

    if (mode == NormalizationMode::PerAlternative) {
        const auto& totals = table.column_totals();
        for (std::size_t i = 0; i < cols; ++i) {
            if (totals[i] == 0) {
                zero_lines.push_back(i);
                continue;
            }
            for (std::size_t k = 0; k < rows; ++k) {
                p[k][i] = static_cast<double>(table(k, i)) / static_cast<double>(totals[i]);
            }
        }
    } else {
        const auto totals = table.row_totals();
        for (std::size_t k = 0; k < rows; ++k) {
            if (totals[k] == 0) {
                zero_lines.push_back(k);
                continue;
            }
            for (std::size_t i = 0; i < cols; ++i) {
                p[k][i] = static_cast<double>(table(k, i)) / static_cast<double>(totals[k]);
            }
        }
    }
    return ProbabilityTable(std::move(p), mode, std::move(zero_lines));
}

HomogeneityReport analyze_session(const DecisionSession& session) {
    if (session.participant_count() < 2) {
        throw Error(ErrorKind::SingleParticipant,
                    "group homogeneity needs at least 2 participants, session '" + session.session_id() +
                        "' has 1");
    }
    HomogeneityReport report;
    report.session_id = session.session_id();
    report.stage = session.stage();
    report.mode = session.config().normalization();
    report.consensus_threshold = session.config().consensus_threshold();
    for (const auto& a : session.alternatives()) report.alternative_ids.push_back(a.id);

    report.distances = rank_distances(session);
    report.probabilities = distance_distribution(report.distances, report.mode);

    const std::size_t n = session.alternative_count();
    for (std::size_t k = 0; k < session.participant_count(); ++k) {
        report.per_participant.push_back(
            {session.participants()[k].id, diversity_indices(report.probabilities.row(k), n)});
    }

    if (report.distances.all_zero()) {
        report.perfect_consensus = true;
        report.homogeneity = 1.0;
        report.diagnostics.push_back("perfect consensus: every participant matches the group ranking");
        return report;
    }

    const std::vector<double> weights = session.normalized_weights();
    report.alpha_entropy = alpha_entropy(report.probabilities, weights);
    report.gamma_entropy = gamma_entropy(report.probabilities, weights);
    const BetaPartition beta = beta_partition(report.alpha_entropy, report.gamma_entropy);
    report.beta_entropy = beta.beta_entropy;
    report.beta_diversity = beta.beta_diversity;
    report.homogeneity = 1.0 / beta.beta_diversity;

    for (std::size_t line : report.probabilities.zero_lines()) {
        if (report.mode == NormalizationMode::PerAlternative) {
            report.diagnostics.push_back("alternative '" + report.alternative_ids[line] +
                                         "' has zero total distance (full agreement on it)");
        } else {
            report.diagnostics.push_back("participant '" + session.participants()[line].id +
                                         "' matches the group ranking exactly");
        }
    }
    for (const auto& p : report.per_participant) {
        if (p.indices.over_dispersed()) {
            report.diagnostics.push_back("participant '" + p.participant_id + "' uniformity " +
                                         format_value(p.indices.uniformity) +
                                         " > 1: over-dispersed relative to a normalized uniform");
        }
    }
    return report;
}

constexpr std::size_t kParallelPairThreshold = 16;

PairwiseMatrix pairwise_homogeneity(const DecisionSession& session) {
    const std::size_t k = session.participant_count();
    if (k < 2) {
        throw Error(ErrorKind::SingleParticipant, "pairwise homogeneity needs at least 2 participants");
    }
    PairwiseMatrix out;
    for (const auto& p : session.participants()) out.participant_ids.push_back(p.id);
    out.values.assign(k, std::vector<double>(k, 1.0));

    // Pairs are split across a bounded set of workers; each worker writes only
    // its own slots, and the matrix is filled in index order afterwards.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
    }
    std::vector<double> results(pairs.size());
    const auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t t = first; t < pairs.size(); t += stride) {
            const std::size_t idx[2] = {pairs[t].first, pairs[t].second};
            results[t] = analyze_session(session.restricted_to(idx)).homogeneity;
        }
    };
    if (pairs.size() >= kParallelPairThreshold) {
        const std::size_t workers =
            std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), pairs.size());
        std::vector<std::future<void>> tasks;
        for (std::size_t w = 0; w < workers; ++w) tasks.push_back(std::async(std::launch::async, work, w, workers));
        for (auto& t : tasks) t.get();
    } else {
        work(0, 1);
    }
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        const auto [a, b] = pairs[t];
        out.values[a][b] = results[t];
        out.values[b][a] = results[t];
    }
    return out;
}

HomogeneityReport analyze_session_with_pairwise(const DecisionSession& session) {
    HomogeneityReport report = analyze_session(session);
    report.pairwise = pairwise_homogeneity(session);
    return report;
}

std::string_view to_string(Verdict verdict) noexcept {
    return verdict == Verdict::Homogeneous ? "homogeneous" : "heterogeneous";
}

SummativeResult summative_homogeneity(const ProjectRecord& record) {
    const auto& stages = record.stages();
    if (stages.empty()) {
        throw Error(ErrorKind::EmptyProject, "project '" + record.project_id() + "' has no stages");
    }
    double total = 0.0;
    for (const auto& s : stages) total += s.homogeneity;
    SummativeResult result;
    result.h_tot = total / static_cast<double>(stages.size());
    result.verdict = result.h_tot >= record.threshold() ? Verdict::Homogeneous : Verdict::Heterogeneous;
    return result;
}

}  // namespace consensus
