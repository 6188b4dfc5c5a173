#pragma once

// Domain types for group decision analysis. Every type with an invariant
// validates it on construction and throws consensus::Error on violation;
// nothing is silently repaired.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "consensus/error.hpp"

namespace consensus {

struct Alternative {
    std::string id;
    std::string label;

    bool operator==(const Alternative&) const = default;
};

struct Participant {
    std::string id;
    std::string label;
    /// Raw voting weight; sessions normalize over all participants.
    double weight = 1.0;

    bool operator==(const Participant&) const = default;
};

struct Criterion {
    std::string id;
    std::string label;
    double weight = 1.0;

    bool operator==(const Criterion&) const = default;
};

/// Normalizes nonnegative weights to sum to 1. Throws WeightMismatch if any
/// weight is negative or non-finite, or if all are zero.
std::vector<double> normalize_weights(std::span<const double> raw);

/// Number of ordinal categories, bounded to [2, 9].
class LikertScale {
public:
    static constexpr int kMinCategories = 2;
    static constexpr int kMaxCategories = 9;

    explicit LikertScale(int categories = kMaxCategories);

    int categories() const noexcept { return categories_; }

    bool operator==(const LikertScale&) const = default;

private:
    int categories_;
};

/// Dense ranking over n alternatives: rank 1 is the most preferred, ties
/// share a rank, and the set of ranks used is exactly {1, ..., max}.
class RankVector {
public:
    explicit RankVector(std::vector<int> ranks);

    std::size_t size() const noexcept { return ranks_.size(); }
    int operator[](std::size_t i) const { return ranks_[i]; }
    int max_rank() const noexcept;
    const std::vector<int>& ranks() const noexcept { return ranks_; }

    bool operator==(const RankVector&) const = default;

private:
    std::vector<int> ranks_;
};

enum class NormalizationMode { PerAlternative, PerLearner };
enum class WeightMode { Uniform, Explicit };

std::string_view to_string(NormalizationMode mode) noexcept;
std::string_view to_string(WeightMode mode) noexcept;

class PipelineConfig {
public:
    PipelineConfig() = default;
    PipelineConfig(NormalizationMode normalization, WeightMode weights, LikertScale likert,
                   double consensus_threshold);

    NormalizationMode normalization() const noexcept { return normalization_; }
    WeightMode participant_weights() const noexcept { return weights_; }
    const LikertScale& likert() const noexcept { return likert_; }
    /// The homogeneity threshold a group must reach to be called homogeneous.
    double consensus_threshold() const noexcept { return threshold_; }

    bool operator==(const PipelineConfig&) const = default;

private:
    NormalizationMode normalization_ = NormalizationMode::PerAlternative;
    WeightMode weights_ = WeightMode::Uniform;
    LikertScale likert_{};
    double threshold_ = 0.5;
};

/// One collaborative decision: each participant's ranking of the
/// alternatives and the group's ranking.
class DecisionSession {
public:
    DecisionSession(std::string session_id, std::string stage, std::vector<Alternative> alternatives,
                    std::vector<Participant> participants, std::vector<RankVector> individual_ranks,
                    RankVector group_ranks, PipelineConfig config = {});

    const std::string& session_id() const noexcept { return session_id_; }
    const std::string& stage() const noexcept { return stage_; }
    const std::vector<Alternative>& alternatives() const noexcept { return alternatives_; }
    const std::vector<Participant>& participants() const noexcept { return participants_; }
    /// Rank vectors aligned with participants().
    const std::vector<RankVector>& individual_ranks() const noexcept { return individual_ranks_; }
    const RankVector& group_ranks() const noexcept { return group_ranks_; }
    const PipelineConfig& config() const noexcept { return config_; }

    std::size_t alternative_count() const noexcept { return alternatives_.size(); }
    std::size_t participant_count() const noexcept { return participants_.size(); }

    const RankVector& ranks_of(std::string_view participant_id) const;

    /// Participant weights summing to 1: 1/K in uniform mode, the normalized
    /// raw weights in explicit mode.
    std::vector<double> normalized_weights() const;

    /// Same decision restricted to the given participants (by index), with
    /// uniform weights and the original group ranking as reference.
    DecisionSession restricted_to(std::span<const std::size_t> participant_indices) const;

    DecisionSession with_config(const PipelineConfig& config) const;

    bool operator==(const DecisionSession&) const = default;

private:
    std::string session_id_;
    std::string stage_;
    std::vector<Alternative> alternatives_;
    std::vector<Participant> participants_;
    std::vector<RankVector> individual_ranks_;
    RankVector group_ranks_;
    PipelineConfig config_;
};

/// Square reciprocal matrix of pairwise judgments.
class ComparisonMatrix {
public:
    explicit ComparisonMatrix(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    std::vector<std::vector<double>> rows() const;

    bool operator==(const ComparisonMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> entries_;
};

struct Consistency {
    double lambda_max = 0.0;
    double consistency_index = 0.0;
    double consistency_ratio = 0.0;

    bool operator==(const Consistency&) const = default;
};

/// Normalized priorities. Vectors derived from a comparison matrix also carry
/// their consistency figures; synthesized or aggregated vectors do not.
class PriorityVector {
public:
    explicit PriorityVector(std::vector<double> priorities,
                            std::optional<Consistency> consistency = std::nullopt);

    std::size_t size() const noexcept { return priorities_.size(); }
    double operator[](std::size_t i) const { return priorities_[i]; }
    const std::vector<double>& priorities() const noexcept { return priorities_; }
    const std::optional<Consistency>& consistency() const noexcept { return consistency_; }

private:
    std::vector<double> priorities_;
    std::optional<Consistency> consistency_;
};

/// Absolute rank distances to the group ranking; rows are participants,
/// columns alternatives.
class DistanceTable {
public:
    DistanceTable() = default;
    explicit DistanceTable(std::vector<std::vector<int>> distances);

    std::size_t rows() const noexcept { return distances_.size(); }
    std::size_t cols() const noexcept { return column_totals_.size(); }
    int operator()(std::size_t participant, std::size_t alternative) const {
        return distances_[participant][alternative];
    }
    const std::vector<std::vector<int>>& distances() const noexcept { return distances_; }
    const std::vector<int>& column_totals() const noexcept { return column_totals_; }
    std::vector<int> row_totals() const;
    bool all_zero() const noexcept;

private:
    std::vector<std::vector<int>> distances_;
    std::vector<int> column_totals_;
};

class ProbabilityTable {
public:
    /// zero_lines holds the alternative indices (per-alternative mode) or
    /// participant indices (per-learner mode) whose total was zero.
    ProbabilityTable() = default;
    ProbabilityTable(std::vector<std::vector<double>> probabilities, NormalizationMode mode,
                     std::vector<std::size_t> zero_lines);

    std::size_t rows() const noexcept { return probabilities_.size(); }
    std::size_t cols() const noexcept { return probabilities_.empty() ? 0 : probabilities_[0].size(); }
    double operator()(std::size_t participant, std::size_t alternative) const {
        return probabilities_[participant][alternative];
    }
    std::span<const double> row(std::size_t participant) const { return probabilities_[participant]; }
    const std::vector<std::vector<double>>& probabilities() const noexcept { return probabilities_; }
    NormalizationMode mode() const noexcept { return mode_; }
    const std::vector<std::size_t>& zero_lines() const noexcept { return zero_lines_; }

private:
    std::vector<std::vector<double>> probabilities_;
    NormalizationMode mode_ = NormalizationMode::PerAlternative;
    std::vector<std::size_t> zero_lines_;
};

struct DiversityIndices {
    double entropy = 0.0;
    double first_order_diversity = 1.0;
    double uniformity = 0.0;

    /// Uniformity above 1 is possible for unnormalized distance rows.
    bool over_dispersed() const noexcept { return uniformity > 1.0; }
};

struct ParticipantIndices {
    std::string participant_id;
    DiversityIndices indices;
};

struct PairwiseMatrix {
    std::vector<std::string> participant_ids;
    std::vector<std::vector<double>> values;
};

struct HomogeneityReport {
    std::string session_id;
    std::string stage;
    NormalizationMode mode = NormalizationMode::PerAlternative;
    std::vector<std::string> alternative_ids;
    DistanceTable distances;
    ProbabilityTable probabilities;
    std::vector<ParticipantIndices> per_participant;
    double alpha_entropy = 0.0;
    double gamma_entropy = 0.0;
    double beta_entropy = 0.0;
    double beta_diversity = 1.0;
    double homogeneity = 1.0;
    bool perfect_consensus = false;
    double consensus_threshold = 0.5;
    std::optional<PairwiseMatrix> pairwise;
    std::vector<std::string> diagnostics;

    double alpha_diversity() const;
    double gamma_diversity() const;
    bool meets_threshold() const noexcept { return homogeneity >= consensus_threshold; }
};

struct StageHomogeneity {
    std::string stage;
    double homogeneity = 0.0;

    bool operator==(const StageHomogeneity&) const = default;
};

class ProjectRecord {
public:
    ProjectRecord(std::string project_id, std::vector<StageHomogeneity> stages, double threshold);

    const std::string& project_id() const noexcept { return project_id_; }
    const std::vector<StageHomogeneity>& stages() const noexcept { return stages_; }
    double threshold() const noexcept { return threshold_; }

private:
    std::string project_id_;
    std::vector<StageHomogeneity> stages_;
    double threshold_;
};

}  // namespace consensus
