#include "consensus/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace consensus {

RankVector scores_to_ranks(std::span<const double> scores, double tie_tolerance) {
    if (scores.size() < 2) {
        throw Error(ErrorKind::InvalidCount, "ranking needs at least 2 scores");
    }
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (!std::isfinite(scores[i])) {
            throw Error(ErrorKind::NonFiniteScore, "score " + std::to_string(i) + " is not finite");
        }
    }
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    std::vector<int> ranks(scores.size(), 0);
    int rank = 1;
    double group_head = scores[order.front()];
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const double s = scores[order[pos]];
        if (group_head - s > tie_tolerance) {
            ++rank;
            group_head = s;
        }
        ranks[order[pos]] = rank;
    }
    return RankVector(std::move(ranks));
}

std::optional<Error> validate_likert(const RankVector& ranks, const LikertScale& scale) {
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (ranks[i] > scale.categories()) {
            return Error(ErrorKind::RankExceedsScale,
                         "alternative " + std::to_string(i) + " has rank " + std::to_string(ranks[i]) +
                             " beyond a " + std::to_string(scale.categories()) + "-category scale",
                         i, static_cast<std::size_t>(ranks[i]));
        }
    }
    return std::nullopt;
}

}  // namespace consensus
