#pragma once

// Group homogeneity pipeline: rank distances to the group solution, their
// normalized distributions, the alpha/gamma/beta entropy partition and the
// homogeneity indicator M = 1 / D_beta.

#include <span>
#include <vector>

#include "consensus/model.hpp"

namespace consensus {

/// distances[k][i] = |group_i - rank_i^k|.
DistanceTable rank_distances(const RankVector& group, std::span<const RankVector> individual);
DistanceTable rank_distances(const DecisionSession& session);

/// PerAlternative divides each distance by its column total, PerLearner by its
/// row total. Zero totals leave an all-zero column (row) recorded in
/// zero_lines().
ProbabilityTable distance_distribution(const DistanceTable& table, NormalizationMode mode);

/// Group report for a session with at least two participants. When every
/// distance is zero the entropy chain is skipped and M is exactly 1.
/// Throws SingleParticipant for one-participant sessions.
HomogeneityReport analyze_session(const DecisionSession& session);

/// Entry (a, b) is the homogeneity of the session restricted to participants
/// a and b with equal weights, still measured against the full group ranking.
PairwiseMatrix pairwise_homogeneity(const DecisionSession& session);

/// analyze_session with the pairwise matrix attached.
HomogeneityReport analyze_session_with_pairwise(const DecisionSession& session);

enum class Verdict { Homogeneous, Heterogeneous };

std::string_view to_string(Verdict verdict) noexcept;

struct SummativeResult {
    /// Mean of the per-stage homogeneity values.
    double h_tot = 0.0;
    Verdict verdict = Verdict::Heterogeneous;
};

/// Homogeneous iff the stage mean reaches the record's threshold.
SummativeResult summative_homogeneity(const ProjectRecord& record);

}  // namespace consensus
