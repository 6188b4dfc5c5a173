#include "consensus/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "consensus/ahp.hpp"
#include "consensus/ranking.hpp"

namespace consensus {

namespace {

constexpr double kSumTolerance = 1e-9;

template <typename T>
void require_unique_ids(const std::vector<T>& items, std::string_view what) {
    std::set<std::string> seen;
    for (const auto& item : items) {
        if (item.id.empty()) {
            throw Error(ErrorKind::InvariantViolation, std::string(what) + " id must not be empty");
        }
        if (!seen.insert(item.id).second) {
            throw Error(ErrorKind::InvariantViolation,
                        "duplicate " + std::string(what) + " id '" + item.id + "'");
        }
    }
}

}  // namespace

std::vector<double> normalize_weights(std::span<const double> raw) {
    double total = 0.0;
    for (double w : raw) {
        if (!std::isfinite(w) || w < 0.0) {
            throw Error(ErrorKind::WeightMismatch, "weights must be finite and nonnegative");
        }
        total += w;
    }
    if (raw.empty() || total <= 0.0) {
        throw Error(ErrorKind::WeightMismatch, "weights must have a positive sum");
    }
    std::vector<double> out(raw.begin(), raw.end());
    for (double& w : out) w /= total;
    return out;
}

LikertScale::LikertScale(int categories) : categories_(categories) {
    if (categories < kMinCategories || categories > kMaxCategories) {
        throw Error(ErrorKind::InvariantViolation,
                    "Likert scale needs 2 to 9 categories, got " + std::to_string(categories));
    }
}

RankVector::RankVector(std::vector<int> ranks) : ranks_(std::move(ranks)) {
    const int n = static_cast<int>(ranks_.size());
    if (n == 0) throw Error(ErrorKind::InvariantViolation, "rank vector is empty");
    std::vector<bool> used(ranks_.size() + 1, false);
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
        const int r = ranks_[i];
        if (r < 1 || r > n) {
            throw Error(ErrorKind::InvariantViolation,
                        "rank " + std::to_string(r) + " at position " + std::to_string(i) +
                            " outside [1, " + std::to_string(n) + "]");
        }
        used[static_cast<std::size_t>(r)] = true;
    }
    const int top = max_rank();
    for (int r = 1; r < top; ++r) {
        if (!used[static_cast<std::size_t>(r)]) {
            throw Error(ErrorKind::InvariantViolation,
                        "ranking is not dense: rank " + std::to_string(r) + " missing below " +
                            std::to_string(top));
        }
    }
}

int RankVector::max_rank() const noexcept { return *std::max_element(ranks_.begin(), ranks_.end()); }

std::string_view to_string(NormalizationMode mode) noexcept {
    return mode == NormalizationMode::PerAlternative ? "per_alternative" : "per_learner";
}

std::string_view to_string(WeightMode mode) noexcept {
    return mode == WeightMode::Uniform ? "uniform" : "explicit";
}

PipelineConfig::PipelineConfig(NormalizationMode normalization, WeightMode weights,
                               LikertScale likert, double consensus_threshold)
    : normalization_(normalization),
      weights_(weights),
      likert_(likert),
      threshold_(consensus_threshold) {
    if (!(consensus_threshold >= 0.0 && consensus_threshold <= 1.0)) {
        throw Error(ErrorKind::InvariantViolation, "consensus threshold must lie in [0, 1]");
    }
}

DecisionSession::DecisionSession(std::string session_id, std::string stage,
                                 std::vector<Alternative> alternatives,
                                 std::vector<Participant> participants,
                                 std::vector<RankVector> individual_ranks, RankVector group_ranks,
                                 PipelineConfig config)
    : session_id_(std::move(session_id)),
      stage_(std::move(stage)),
      alternatives_(std::move(alternatives)),
      participants_(std::move(participants)),
      individual_ranks_(std::move(individual_ranks)),
      group_ranks_(std::move(group_ranks)),
      config_(config) {
    if (alternatives_.size() < 2) {
        throw Error(ErrorKind::InvariantViolation, "a session needs at least 2 alternatives");
    }
    if (participants_.empty()) {
        throw Error(ErrorKind::InvariantViolation, "a session needs at least 1 participant");
    }
    require_unique_ids(alternatives_, "alternative");
    require_unique_ids(participants_, "participant");
    if (individual_ranks_.size() != participants_.size()) {
        throw Error(ErrorKind::InvariantViolation,
                    "expected one rank vector per participant (" +
                        std::to_string(participants_.size()) + "), got " +
                        std::to_string(individual_ranks_.size()));
    }
    const auto check_ranks = [&](const RankVector& ranks, const std::string& owner) {
        if (ranks.size() != alternatives_.size()) {
            throw Error(ErrorKind::InvariantViolation,
                        owner + " ranks " + std::to_string(ranks.size()) + " alternatives, session has " +
                            std::to_string(alternatives_.size()));
        }
        if (auto err = validate_likert(ranks, config_.likert())) {
            throw Error(err->kind(), owner + ": " + err->what());
        }
    };
    for (std::size_t k = 0; k < participants_.size(); ++k) {
        check_ranks(individual_ranks_[k], "participant '" + participants_[k].id + "'");
    }
    check_ranks(group_ranks_, "group");

    std::vector<double> raw;
    for (const auto& p : participants_) raw.push_back(p.weight);
    if (config_.participant_weights() == WeightMode::Explicit) {
        normalize_weights(raw);
    } else {
        for (double w : raw) {
            if (!std::isfinite(w) || w < 0.0) {
                throw Error(ErrorKind::WeightMismatch, "participant weights must be nonnegative");
            }
        }
    }
}

const RankVector& DecisionSession::ranks_of(std::string_view participant_id) const {
    for (std::size_t k = 0; k < participants_.size(); ++k) {
        if (participants_[k].id == participant_id) return individual_ranks_[k];
    }
    throw Error(ErrorKind::InvariantViolation,
                "unknown participant '" + std::string(participant_id) + "'");
}

std::vector<double> DecisionSession::normalized_weights() const {
    if (config_.participant_weights() == WeightMode::Uniform) {
        return std::vector<double>(participants_.size(), 1.0 / static_cast<double>(participants_.size()));
    }
    std::vector<double> raw;
    raw.reserve(participants_.size());
    for (const auto& p : participants_) raw.push_back(p.weight);
    return normalize_weights(raw);
}

DecisionSession DecisionSession::restricted_to(std::span<const std::size_t> participant_indices) const {
    std::vector<Participant> subset;
    std::vector<RankVector> ranks;
    for (std::size_t k : participant_indices) {
        if (k >= participants_.size()) {
            throw Error(ErrorKind::InvariantViolation, "participant index out of range");
        }
        subset.push_back(participants_[k]);
        ranks.push_back(individual_ranks_[k]);
    }
    PipelineConfig cfg(config_.normalization(), WeightMode::Uniform, config_.likert(),
                       config_.consensus_threshold());
    return DecisionSession(session_id_, stage_, alternatives_, std::move(subset), std::move(ranks),
                           group_ranks_, cfg);
}

DecisionSession DecisionSession::with_config(const PipelineConfig& config) const {
    return DecisionSession(session_id_, stage_, alternatives_, participants_, individual_ranks_, group_ranks_, config);
}

ComparisonMatrix::ComparisonMatrix(const std::vector<std::vector<double>>& rows) {
    if (auto err = validate_comparison_matrix(rows)) throw *err;
    n_ = rows.size();
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) entries_.insert(entries_.end(), row.begin(), row.end());
}

std::vector<std::vector<double>> ComparisonMatrix::rows() const {
    std::vector<std::vector<double>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                      entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
    }
    return out;
}

PriorityVector::PriorityVector(std::vector<double> priorities, std::optional<Consistency> consistency)
    : priorities_(std::move(priorities)), consistency_(consistency) {
    if (priorities_.empty()) throw Error(ErrorKind::InvariantViolation, "priority vector is empty");
    double total = 0.0;
    for (double p : priorities_) {
        if (!std::isfinite(p) || p < 0.0) {
            throw Error(ErrorKind::InvariantViolation, "priorities must be finite and nonnegative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kSumTolerance) {
        throw Error(ErrorKind::InvariantViolation,
                    "priorities must sum to 1, got " + std::to_string(total));
    }
    if (consistency_ && consistency_->lambda_max < static_cast<double>(priorities_.size()) - 1e-9) {
        throw Error(ErrorKind::InvariantViolation, "lambda_max below matrix size");
    }
}

DistanceTable::DistanceTable(std::vector<std::vector<int>> distances)
    : distances_(std::move(distances)) {
    const std::size_t n = distances_.empty() ? 0 : distances_.front().size();
    column_totals_.assign(n, 0);
    for (const auto& row : distances_) {
        if (row.size() != n) throw Error(ErrorKind::InvariantViolation, "ragged distance table");
        for (std::size_t i = 0; i < n; ++i) {
            if (row[i] < 0) throw Error(ErrorKind::InvariantViolation, "negative distance");
            column_totals_[i] += row[i];
        }
    }
}

std::vector<int> DistanceTable::row_totals() const {
    std::vector<int> totals;
    totals.reserve(distances_.size());
    for (const auto& row : distances_) totals.push_back(std::accumulate(row.begin(), row.end(), 0));
    return totals;
}

bool DistanceTable::all_zero() const noexcept {
    return std::all_of(column_totals_.begin(), column_totals_.end(), [](int t) { return t == 0; });
}

ProbabilityTable::ProbabilityTable(std::vector<std::vector<double>> probabilities,
                                   NormalizationMode mode, std::vector<std::size_t> zero_lines)
    : probabilities_(std::move(probabilities)), mode_(mode), zero_lines_(std::move(zero_lines)) {
    const std::size_t n = cols();
    for (const auto& row : probabilities_) {
        if (row.size() != n) throw Error(ErrorKind::InvariantViolation, "ragged probability table");
        for (double p : row) {
            if (!(p >= 0.0 && p <= 1.0)) {
                throw Error(ErrorKind::ComponentOutOfRange, "probability outside [0, 1]");
            }
        }
    }
}

double HomogeneityReport::alpha_diversity() const { return std::exp(alpha_entropy); }
double HomogeneityReport::gamma_diversity() const { return std::exp(gamma_entropy); }

ProjectRecord::ProjectRecord(std::string project_id, std::vector<StageHomogeneity> stages,
                             double threshold)
    : project_id_(std::move(project_id)), stages_(std::move(stages)), threshold_(threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw Error(ErrorKind::InvariantViolation, "threshold must lie in [0, 1]");
    }
    for (const auto& s : stages_) {
        if (!(s.homogeneity >= 0.0 && s.homogeneity <= 1.0)) {
            throw Error(ErrorKind::InvariantViolation,
                        "stage '" + s.stage + "' homogeneity must lie in [0, 1]");
        }
    }
}

}  // namespace consensus
