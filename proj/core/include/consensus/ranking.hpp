#pragma once

#include <optional>
#include <span>

#include "consensus/error.hpp"
#include "consensus/model.hpp"

namespace consensus {

inline constexpr double kDefaultTieTolerance = 1e-9;

/// Dense ranking of preference scores: the highest score gets rank 1, scores
/// within tie_tolerance of the first score of their tie group share its rank,
/// and the next distinct score gets the next consecutive rank.
RankVector scores_to_ranks(std::span<const double> scores,
                           double tie_tolerance = kDefaultTieTolerance);

/// Returns RankExceedsScale if any rank is above the scale's category count.
std::optional<Error> validate_likert(const RankVector& ranks, const LikertScale& scale);

}  // namespace consensus
